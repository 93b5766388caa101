#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "tripack/circulant.hpp"
#include "tripack/error.hpp"

using namespace tripack;

namespace {

bool is_hamiltonian_cycle(const SimpleGraph& g, const Cycle& c) {
  if (static_cast<int>(c.size()) != g.order()) return false;
  std::vector<int> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.order(); ++i)
    if (sorted[i] != i + 1) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.adjacent(c[i] - 1, c[(i + 1) % c.size()] - 1)) return false;
  return true;
}

void check_decomposition(const CirculantSpec& spec) {
  const auto g = build_circulant(spec);
  const auto p = hamiltonian_decomposition(spec);
  REQUIRE(oracle::valid_packing(p));
  CHECK(p.shape == TwoFactorShape{spec.n});
  for (const auto& copy : p.copies) CHECK(is_hamiltonian_cycle(g, copy.cycles.front()));
  CHECK(oracle::union_of(p) == g);
}

}  // namespace

TEST_CASE("circulant construction") {
  const CirculantSpec spec{11, {1, 2, 3}};
  const auto g = build_circulant(spec);
  CHECK(g.is_regular(6));
  CHECK(g.size() == 33);
  for (int x = 0; x < 11; ++x)
    for (int y = 0; y < 11; ++y) {
      const int d = std::min((x - y + 11) % 11, (y - x + 11) % 11);
      CHECK(g.adjacent(x, y) == (d >= 1 && d <= 3));
    }
  CHECK(spec.to_string() == "C11(1,2,3)");
}

TEST_CASE("invalid generators") {
  CHECK_THROWS_AS(build_circulant({9, {1, 4, 5}}), Error);   // 4 = -5 mod 9
  CHECK_THROWS_AS(build_circulant({10, {1, 4, 5}}), Error);  // 5 = n/2
  CHECK_THROWS_AS(build_circulant({10, {1, 1, 2}}), Error);
  CHECK_THROWS_AS(build_circulant({10, {0, 1, 2}}), Error);
  CHECK_THROWS_AS(build_circulant({10, {1, 2, 10}}), Error);
  try {
    build_circulant({9, {1, 4, 5}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGenerators);
  }
}

TEST_CASE("rotation cycles for unit generators") {
  const auto p = hamiltonian_decomposition({7, {1, 2, 3}});
  CHECK(p.copies[0].cycles.front() == Cycle{1, 2, 3, 4, 5, 6, 7});
  CHECK(p.copies[1].cycles.front() == Cycle{1, 3, 5, 7, 2, 4, 6});
  CHECK(p.copies[2].cycles.front() == Cycle{1, 4, 7, 3, 6, 2, 5});
  CHECK(oracle::union_of(p) == build_circulant({7, {1, 2, 3}}));
}

TEST_CASE("decompositions with non-unit generators") {
  check_decomposition({12, {1, 3, 4}});
  check_decomposition({12, {1, 3, 5}});
  check_decomposition({10, {1, 2, 4}});
  check_decomposition({15, {1, 3, 5}});
  check_decomposition({12, {2, 3, 4}});  // no unit generator at all
  check_decomposition({8, {1, 2, 3}});
  CHECK_THROWS_AS(hamiltonian_decomposition({12, {2, 4, 6}}), Error);  // 6 = n/2
  CHECK_THROWS_AS(hamiltonian_decomposition({16, {2, 4, 6}}), Error);  // disconnected
}

TEST_CASE("hamiltonian splitting of small complete graphs") {
  auto k5 = complement(SimpleGraph(5));
  auto cycles = split_into_hamiltonian_cycles(k5, 2);
  REQUIRE(cycles);
  CHECK(cycles->size() == 2);
  SimpleGraph k44(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 4; j < 8; ++j) k44.add_edge(i, j);
  CHECK(split_into_hamiltonian_cycles(k44, 2).has_value());
  // Two disjoint K5: 4-regular but no Hamiltonian cycle.
  SimpleGraph twice(10);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      twice.add_edge(i, j);
      twice.add_edge(i + 5, j + 5);
    }
  CHECK_FALSE(split_into_hamiltonian_cycles(twice, 2).has_value());
}

TEST_CASE("predicted chromatic numbers match exact computation") {
  int covered = 0;
  std::vector<CirculantSpec> misses;
  for (int n = 7; n <= 28; ++n)
    for (int a = 1; 2 * a < n; ++a)
      for (int b = a + 1; 2 * b < n; ++b)
        for (int c = b + 1; 2 * c < n; ++c) {
          const CirculantSpec spec{n, {a, b, c}};
          if (!is_connected_circulant(spec)) continue;
          const auto predicted = predicted_chromatic_number(spec);
          if (!predicted) continue;
          ++covered;
          INFO(spec.to_string());
          const int exact = oracle::chromatic_number(build_circulant(spec));
          if (*predicted != exact) misses.push_back(spec);
        }
  CHECK(covered > 100);
  // The table misses one isomorphism class of order 25: 5-chromatic, yet
  // isomorphic to none of the listed exceptions.
  const auto missed = build_circulant({25, {1, 9, 10}});
  REQUIRE(misses.size() == 10);
  for (const auto& spec : misses) {
    INFO(spec.to_string());
    CHECK(spec.n == 25);
    CHECK(oracle::chromatic_number(build_circulant(spec)) == 5);
    CHECK(are_isomorphic(build_circulant(spec), missed));
  }
  CHECK_FALSE(are_isomorphic(missed, build_circulant({25, {1, 3, 4}})));
  CHECK_FALSE(are_isomorphic(missed, build_circulant({25, {1, 2, 3}})));
}

TEST_CASE("known chromatic values") {
  CHECK(predicted_chromatic_number({7, {1, 2, 3}}) == 7);
  CHECK(predicted_chromatic_number({11, {1, 2, 3}}) == 6);
  CHECK(predicted_chromatic_number({11, {1, 4, 5}}) == 6);
  CHECK(predicted_chromatic_number({13, {1, 3, 4}}) == 5);
  CHECK(predicted_chromatic_number({37, {1, 10, 11}}) == 5);
  CHECK(predicted_chromatic_number({15, {1, 4, 5}}) == 3);
  CHECK(predicted_chromatic_number({14, {1, 3, 4}}) == 4);
  CHECK_FALSE(predicted_chromatic_number({13, {1, 2, 5}}).has_value());
  CHECK(chromatic_number(build_circulant({11, {1, 2, 3}})) == 6);
}

TEST_CASE("generator pairs are non-isomorphic and decompose") {
  CHECK_THROWS_AS(select_generator_pair(8), Error);
  for (int n = 9; n <= 24; ++n) {
    const auto [a, b] = select_generator_pair(n);
    INFO(n);
    CHECK(a.generators[0] == 1);
    CHECK(b.generators[0] == 1);
    CHECK_FALSE(are_isomorphic(build_circulant(a), build_circulant(b)));
    if (n % 4 == 0) {
      CHECK(a.generators == std::array<int, 3>{1, 3, 5});
      CHECK(b.generators == std::array<int, 3>{1, 3, 4});
    } else {
      CHECK(a.generators == std::array<int, 3>{1, 2, 3});
    }
    check_decomposition(a);
    check_decomposition(b);
  }
  CHECK(select_generator_pair(15).second.generators == std::array<int, 3>{1, 4, 5});
  CHECK(select_generator_pair(9).second.generators == std::array<int, 3>{1, 2, 4});
}
