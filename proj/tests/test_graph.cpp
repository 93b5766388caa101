#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tripack/error.hpp"
#include "tripack/graph.hpp"
#include "tripack/io.hpp"
#include "tripack/packing.hpp"

using namespace tripack;

namespace {

TriplePacking c3c6() {
  TriplePacking p;
  p.n = 9;
  p.shape = TwoFactorShape{3, 6};
  p.copies[0].cycles = {{1, 2, 3}, {4, 5, 6, 7, 8, 9}};
  p.copies[1].cycles = {{3, 4, 6}, {1, 8, 2, 5, 7, 9}};
  p.copies[2].cycles = {{2, 6, 9}, {1, 4, 8, 5, 3, 7}};
  return p;
}

}  // namespace

TEST_CASE("vertex set operations") {
  VertexSet a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(100);
  CHECK(a.count() == 3);
  CHECK((a & b).members() == std::vector<int>{64});
  CHECK((a | b).count() == 4);
  CHECK((a - b).members() == std::vector<int>{0, 129});
  CHECK(a.first() == 0);
  CHECK(a.next(0) == 64);
  CHECK(a.next(129) == -1);
  a.reset(64);
  CHECK_FALSE(a.test(64));
  CHECK(VertexSet(5).empty());
}

TEST_CASE("simple graph basics") {
  SimpleGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(3, 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK(g.degree(1) == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
  CHECK(components(g) == std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}});
  CHECK_FALSE(is_connected(g));
  g.remove_edge(0, 1);
  CHECK(g.size() == 1);
  CHECK(complement(SimpleGraph(4)).size() == 6);
  CHECK(Edge(5, 2) == Edge(2, 5));
}

TEST_CASE("relabel preserves edges under a permutation") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_graph(rng, 9, 0.4);
    auto perm = oracle::random_permutation(rng, 9);
    auto h = relabel(g, perm);
    CHECK(h.size() == g.size());
    for (const Edge& e : g.edges()) CHECK(h.adjacent(perm[e.u], perm[e.v]));
  }
}

TEST_CASE("two-factor shapes") {
  CHECK(TwoFactorShape::parse("5,3,3").lengths() == std::vector<int>{3, 3, 5});
  CHECK(TwoFactorShape::parse("3,3,5").order() == 11);
  CHECK(TwoFactorShape{4, 5}.to_string() == "4,5");
  CHECK_THROWS_AS(TwoFactorShape::parse("3,2"), Error);
  CHECK_THROWS_AS(TwoFactorShape::parse(""), Error);
  CHECK_THROWS_AS(TwoFactorShape::parse("3,,4"), Error);
  for (int n = 0; n <= 24; ++n) {
    auto shapes = shapes_of_order(n);
    CHECK(static_cast<long>(shapes.size()) == (n == 0 ? 0 : oracle::partitions(n, 3)));
    for (const auto& s : shapes) CHECK(s.order() == n);
  }
}

TEST_CASE("packing validation") {
  auto p = c3c6();
  CHECK(validate_packing(p).ok());
  CHECK(oracle::valid_packing(p));
  CHECK(union_graph(p) == oracle::union_of(p));
  CHECK(union_graph(p).is_regular(6));

  auto overlap = p;
  overlap.copies[1].cycles = {{1, 2, 6}, {3, 8, 4, 5, 7, 9}};
  auto r = validate_packing(overlap);
  CHECK(r.has(ViolationKind::EdgeOverlap));
  CHECK_THROWS_AS(union_graph(overlap), Error);

  auto coverage = p;
  coverage.copies[2].cycles = {{2, 6, 9}, {1, 4, 8, 5, 3, 3}};
  CHECK(validate_packing(coverage).has(ViolationKind::VertexCoverage));

  auto shape = p;
  shape.copies[2].cycles = {{1, 4, 8, 5, 3, 7, 2, 6, 9}};
  CHECK(validate_packing(shape).has(ViolationKind::ShapeMismatch));

  auto degenerate = p;
  degenerate.copies[0].cycles = {{1, 2}, {3, 4, 5, 6, 7, 8, 9}};
  CHECK(validate_packing(degenerate).has(ViolationKind::DegenerateCycle));
}

TEST_CASE("normalization") {
  CHECK(normalize_cycle({5, 9, 1, 7}) == Cycle{1, 7, 5, 9});
  CHECK(normalize_cycle({3, 1, 2}) == Cycle{1, 2, 3});
  auto placement = normalize_placement(CyclePlacement{{{9, 8, 7, 6}, {5, 4, 3}}});
  CHECK(placement.cycles == std::vector<Cycle>{{3, 4, 5}, {6, 7, 8, 9}});
  CHECK(identity_placement(TwoFactorShape{3, 4}).cycles == std::vector<Cycle>{{1, 2, 3}, {4, 5, 6, 7}});
}

TEST_CASE("disjoint union shifts labels") {
  auto p = c3c6();
  auto q = disjoint_union(p, p);
  CHECK(q.n == 18);
  CHECK(q.shape == TwoFactorShape{3, 3, 6, 6});
  CHECK(validate_packing(q).ok());
  CHECK(components(union_graph(q)).size() == 2);
}

TEST_CASE("json and edge-list round trips") {
  auto p = normalized(c3c6());
  CHECK(packing_from_json(to_json(p)) == p);
  CHECK(packing_from_json(Json::parse(to_json(p).dump())) == p);
  CHECK(normalized(packing_from_edge_list(to_edge_list(p))) == p);
  CHECK(read_packing(to_json(p).dump()) == p);
  CHECK(normalized(read_packing(to_edge_list(p))) == p);
  CHECK(to_json(p).dump() == R"({"n":9,"shape":[3,6],"copies":[[[1,2,3],[4,5,6,7,8,9]],[[3,4,6],[1,8,2,5,7,9]],[[2,6,9],[1,4,8,5,3,7]]]})");
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(read_packing("{\"copies\": 3}"), Error);
  CHECK_THROWS_AS(read_packing("{not json"), Error);
  CHECK_THROWS_AS(packing_from_edge_list("1 2\n"), Error);
  CHECK_THROWS_AS(packing_from_edge_list("1 2 4\n"), Error);
  try {
    packing_from_edge_list("1 2 1\n1 2 1\n2 3 1\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPacking);
  }
}

TEST_CASE("dot export colours edges by copy") {
  const std::string dot = to_dot(c3c6());
  CHECK(dot.find("graph packing {") == 0);
  CHECK(dot.find("1 -- 2 [color=black]") != std::string::npos);
  CHECK(dot.find("[color=red]") != std::string::npos);
  CHECK(dot.find("[color=blue]") != std::string::npos);
}
