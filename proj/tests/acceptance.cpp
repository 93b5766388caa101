// Acceptance suite: one PASS/FAIL line per criterion. Runtime limits are
// pinned below; results are exact otherwise.
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tripack/canon.hpp"
#include "tripack/circulant.hpp"
#include "tripack/construct.hpp"
#include "tripack/enumerate.hpp"

using namespace tripack;

namespace {

constexpr double kTableSeconds = 10;
constexpr double kNonexistenceSeconds = 1;
constexpr double kUniquenessSeconds = 600;
constexpr double kCirculantSeconds = 300;
constexpr double kWitnessSeconds = 10;
constexpr double kSweepSeconds = 1800;
constexpr int kSweepMaxN = 20;
constexpr int kStatedSweepShapes = 589;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Failures {
 public:
  void add(const std::string& what) {
    if (++count_ <= 5) text_ += (text_.empty() ? "" : "; ") + what;
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    return count_ <= 5 ? text_ : text_ + "; and " + std::to_string(count_ - 5) + " more";
  }

 private:
  int count_ = 0;
  std::string text_;
};

Outcome verdict(const Failures& f, const std::string& ok) {
  return f.empty() ? Outcome{true, ok} : Outcome{false, f.summary()};
}

Outcome within(Outcome o, double seconds, double limit) {
  if (o.pass && seconds > limit) {
    o.pass = false;
    o.detail += "; took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s";
  }
  return o;
}

// Chromatic number of a connected 6-regular C_n(a,b,c) with c = a+b or
// n-c = a+b, by the published case table; nullopt outside that family.
std::optional<int> table_chromatic(const CirculantSpec& s) {
  const int n = s.n;
  const auto [a, b, c] = s.generators;
  const std::array<std::array<int, 3>, 3> orders{{{a, b, c}, {a, c, b}, {b, c, a}}};
  bool covered = false;
  for (const auto& [x, y, z] : orders)
    if (x + y == z || x + y == n - z) covered = true;
  if (!covered || !is_connected_circulant(s)) return std::nullopt;
  const auto g = build_circulant(s);
  auto iso = [&](int m, std::array<int, 3> gens) {
    return m == n && are_isomorphic(g, build_circulant({m, gens}));
  };
  if (iso(7, {1, 2, 3})) return 7;
  if (iso(11, {1, 2, 3})) return 6;
  if (n % 4 != 0 && n != 7 && n != 11 && iso(n, {1, 2, 3})) return 5;
  const std::vector<std::pair<int, std::array<int, 3>>> fives{
      {13, {1, 3, 4}}, {17, {1, 3, 4}}, {18, {1, 3, 4}},   {19, {1, 7, 8}},
      {25, {1, 3, 4}}, {26, {1, 7, 8}}, {33, {1, 6, 7}}, {37, {1, 10, 11}}};
  for (const auto& [m, gens] : fives)
    if (iso(m, gens)) return 5;
  if (n % 3 == 0 && a % 3 != 0 && b % 3 != 0 && c % 3 != 0) return 3;
  return 4;
}

// ------------------------------------------------------------ criteria

Outcome table_reproduction() {
  Failures f;
  int rows = 0;
  for (const auto& e : catalog_entries()) {
    if (e.source != "table") continue;
    ++rows;
    const auto name = e.shape.to_string();
    if (e.packings.size() != 2) {
      f.add(name + " has " + std::to_string(e.packings.size()) + " packings");
      continue;
    }
    for (const auto& p : e.packings)
      if (!validate_packing(p).ok() || !oracle::valid_packing(p)) f.add(name + " invalid packing");
    const auto a = union_graph(e.packings[0]), b = union_graph(e.packings[1]);
    const auto cert = certify_distinct(a, b);
    if (!cert)
      f.add(name + " not certified");
    else if (!verify_certificate(*cert, a, b))
      f.add(name + " certificate does not verify");
  }
  if (rows != 46) f.add(std::to_string(rows) + " rows instead of 46");
  return verdict(f, "46 rows, 92 valid packings, 46 verified certificates");
}

Outcome enumerate_counts(const std::vector<const char*>& shapes, int expected) {
  Failures f;
  std::string seen;
  for (const char* s : shapes) {
    const auto r = enumerate_unions(TwoFactorShape::parse(s));
    seen += std::string(seen.empty() ? "" : " ") + "[" + s + "]=" + std::to_string(r.count_union_classes);
    if (!r.exhaustive) f.add(std::string("[") + s + "] not exhaustive");
    if (r.count_union_classes != expected)
      f.add(std::string("[") + s + "] count " + std::to_string(r.count_union_classes));
    for (const auto& p : r.representatives)
      if (!oracle::valid_packing(p)) f.add(std::string("[") + s + "] invalid representative");
  }
  return verdict(f, seen + ", all exhaustive");
}

Outcome circulant_decompositions() {
  Failures f;
  for (int n = 9; n <= 40; ++n) {
    const auto [a, b] = select_generator_pair(n);
    for (const auto& spec : {a, b}) {
      const auto p = hamiltonian_decomposition(spec);
      if (!oracle::valid_packing(p)) f.add(spec.to_string() + " invalid");
      if (!(oracle::union_of(p) == build_circulant(spec))) f.add(spec.to_string() + " union differs");
    }
  }
  return verdict(f, "n = 9..40: 64 decompositions, each union equal to its circulant");
}

Outcome circulant_certificates() {
  Failures f;
  for (int n = 9; n <= 40; ++n) {
    const auto [a, b] = select_generator_pair(n);
    const auto ga = build_circulant(a), gb = build_circulant(b);
    CanonLimits limits;
    limits.chromatic_max_n = n;
    const auto cert = certify_distinct(ga, gb, limits);
    const std::string pair = a.to_string() + "/" + b.to_string();
    if (!cert || !verify_certificate(*cert, ga, gb, limits)) {
      f.add(pair + " not certified");
      continue;
    }
    const CertificateKind want =
        n % 4 == 0 ? CertificateKind::BipartiteDiffers : CertificateKind::ChromaticDiffers;
    if (cert->kind() != want) {
      f.add(pair + " certified by " + std::string(to_string(cert->kind())) + ", expected " +
            std::string(to_string(want)));
      continue;
    }
    if (const auto* w = std::get_if<ChromaticWitness>(&cert->witness)) {
      const std::array<CirculantSpec, 2> specs{a, b};
      for (int i = 0; i < 2; ++i)
        if (auto t = table_chromatic(specs[i]); t && *t != w->chromatic[i])
          f.add(specs[i].to_string() + " chi " + std::to_string(w->chromatic[i]) + ", table " +
                std::to_string(*t));
    }
  }
  return verdict(f, "n = 9..40: predicted certificate kinds, chromatic numbers match the table");
}

Outcome circulant_c11_values() {
  Failures f;
  const int chi123 = oracle::chromatic_number(build_circulant({11, {1, 2, 3}}));
  if (chi123 != 6) f.add("chi(C11(1,2,3)) = " + std::to_string(chi123) + ", stated 6");
  const int chi145 = oracle::chromatic_number(build_circulant({11, {1, 4, 5}}));
  if (chi145 != 4) f.add("chi(C11(1,4,5)) = " + std::to_string(chi145) + ", stated 4");
  return verdict(f, "chi(C11(1,2,3)) = 6, chi(C11(1,4,5)) = 4");
}

Outcome witness_45() {
  const auto r = search_packing(TwoFactorShape{4, 5}, PackingConstraint::Any);
  if (r.status != SearchStatus::Found || !r.packing)
    return {false, "search status " + std::string(to_string(r.status))};
  if (!oracle::valid_packing(*r.packing) || !validate_packing(*r.packing).ok())
    return {false, "invalid packing"};
  return {true, "valid packing of three copies of C4 u C5 after " + std::to_string(r.nodes) + " nodes"};
}

Outcome sweep() {
  Failures f;
  long expected_shapes = 0;
  for (int n = 3; n <= kSweepMaxN; ++n) expected_shapes += oracle::partitions(n, 3);
  int shapes = 0;
  std::map<std::string, int> methods;
  for (int n = 3; n <= kSweepMaxN; ++n)
    for (const auto& shape : shapes_of_order(n)) {
      ++shapes;
      const auto name = shape.to_string();
      PackingOutcome o;
      try {
        o = distinct_packings(shape);
      } catch (const std::exception& e) {
        f.add(name + ": " + e.what());
        continue;
      }
      if (outcome_class(o) != expected_class(shape)) {
        f.add(name + " is " + std::string(to_string(outcome_class(o))));
        continue;
      }
      if (const auto* u = std::get_if<Unique>(&o)) {
        if (!oracle::valid_packing(u->packing) || u->packing.shape != shape) f.add(name + " invalid");
      } else if (const auto* p = std::get_if<Pair>(&o)) {
        ++methods[p->method];
        if (!oracle::valid_packing(p->first) || !oracle::valid_packing(p->second) ||
            p->first.shape != shape || p->second.shape != shape)
          f.add(name + " invalid packing");
        CanonLimits limits;
        limits.chromatic_max_n = n;
        if (!verify_certificate(p->certificate, oracle::union_of(p->first),
                                oracle::union_of(p->second), limits))
          f.add(name + " certificate does not verify");
      }
    }
  if (shapes != expected_shapes)
    f.add(std::to_string(shapes) + " shapes enumerated, partition count " +
          std::to_string(expected_shapes));
  std::ostringstream ok;
  ok << shapes << " shapes (stated " << kStatedSweepShapes << "; the partition count is "
     << expected_shapes << "), all classes as prescribed; pairs by";
  for (const auto& [m, c] : methods) ok << ' ' << m << '=' << c;
  return verdict(f, ok.str());
}

// Relabels a packing by a permutation of 1..n.
TriplePacking permuted(const TriplePacking& p, const std::vector<int>& perm) {
  TriplePacking q = p;
  for (auto& copy : q.copies)
    for (auto& c : copy.cycles)
      for (int& v : c) v = perm[v - 1] + 1;
  return normalized(q);
}

Outcome merge_property() {
  Failures f;
  std::mt19937 rng(2024);
  std::vector<TwoFactorShape> pool;
  for (int n = 7; n <= 13; ++n)
    for (const auto& s : shapes_of_order(n))
      if (s != TwoFactorShape{3, 3}) pool.push_back(s);
  for (int t = 0; t < 100; ++t) {
    const int parts = 2 + t % 3;
    TriplePacking p;
    for (int i = 0; i < parts; ++i) {
      const auto& shape = pool[rng() % pool.size()];
      auto piece = any_packing(shape);
      piece = permuted(piece, oracle::random_permutation(rng, piece.n));
      p = i == 0 ? piece : disjoint_union(p, piece);
    }
    const auto q = merge_components(p);
    const std::string name = "case " + std::to_string(t) + " " + p.shape.to_string();
    if (!oracle::valid_packing(q)) f.add(name + " invalid");
    if (!is_connected(oracle::union_of(q))) f.add(name + " disconnected");
    if (q.copies[kBlack] != p.copies[kBlack] || q.copies[kRed] != p.copies[kRed])
      f.add(name + " black or red changed");
    if (q.copies[kBlue].lengths() != p.copies[kBlue].lengths()) f.add(name + " blue lengths changed");
  }
  return verdict(f, "100 disconnected packings (2 to 4 components) merged, valid and connected");
}

Outcome subdivide_property() {
  Failures f;
  std::mt19937 rng(77);
  std::vector<TriplePacking> bases;
  for (const char* s : {"3,11", "4,11", "5,11", "6,11", "3,3,11"})
    bases.push_back(normalized(*family_base(TwoFactorShape::parse(s), false)));
  int applied = 0;
  for (int t = 0; t < 100; ++t) {
    auto p = bases[t % bases.size()];
    for (int step = 0; step <= t % 3; ++step) {
      // A random cycle length present in all three copies, then a random
      // independent black/blue/red triple on those cycles.
      const auto lengths = p.shape.lengths();
      const int q = lengths[rng() % lengths.size()];
      TargetCycles targets{};
      for (int c = 0; c < 3; ++c) {
        std::vector<int> idx;
        for (int i = 0; i < static_cast<int>(p.copies[c].cycles.size()); ++i)
          if (static_cast<int>(p.copies[c].cycles[i].size()) == q) idx.push_back(i);
        targets[c] = idx[rng() % idx.size()];
      }
      std::vector<std::array<Edge, 3>> triples;
      for (const Edge& e1 : cycle_edges(p.copies[kBlack].cycles[targets[kBlack]]))
        for (const Edge& e2 : cycle_edges(p.copies[kBlue].cycles[targets[kBlue]]))
          for (const Edge& e3 : cycle_edges(p.copies[kRed].cycles[targets[kRed]]))
            if (!e1.shares_vertex(e2) && !e1.shares_vertex(e3) && !e2.shares_vertex(e3))
              triples.push_back({e1, e2, e3});
      if (triples.empty()) continue;
      const auto& [e1, e2, e3] = triples[rng() % triples.size()];
      const std::string name = "case " + std::to_string(t) + " " + p.shape.to_string();
      if (find_k5(union_graph(p)) || oracle::has_clique(oracle::union_of(p), 5))
        f.add(name + " base has a K5");
      auto next = subdivide_matching(p, targets, e1, e2, e3);
      ++applied;
      if (!oracle::valid_packing(next)) f.add(name + " invalid");
      if (find_k5(union_graph(next)) || oracle::has_clique(oracle::union_of(next), 5))
        f.add(name + " gained a K5");
      p = std::move(next);
    }
  }
  if (applied < 100) f.add("only " + std::to_string(applied) + " applications");
  return verdict(f, std::to_string(applied) + " random subdivisions, all valid and K5-free");
}

Outcome canon_invariance() {
  Failures f;
  std::mt19937 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const auto g = oracle::random_graph(rng, n, density);
    const auto h = relabel(g, oracle::random_permutation(rng, n));
    if (!(canonical_form(g) == canonical_form(h))) f.add("graph " + std::to_string(t));
  }
  return verdict(f, "1000 random graphs, n <= 12, canonical form invariant");
}

Outcome canon_vs_brute_force() {
  Failures f;
  long pairs = 0;
  for (int n = 7; n <= 8; ++n) {
    std::vector<SimpleGraph> unions;
    for (const auto& shape : shapes_of_order(n))
      for (auto m : oracle::labelled_unions(shape)) unions.push_back(oracle::graph_of_mask(n, m));
    for (std::size_t i = 0; i < unions.size(); ++i)
      for (std::size_t j = i; j < unions.size(); ++j) {
        ++pairs;
        if ((canonical_form(unions[i]) == canonical_form(unions[j])) !=
            brute_force_isomorphic(unions[i], unions[j]))
          f.add("n = " + std::to_string(n) + " pair " + std::to_string(i) + "," + std::to_string(j));
      }
  }
  return verdict(f, std::to_string(pairs) + " union pairs at n <= 8 agree");
}

struct Criterion {
  std::string id;
  std::string title;
  double limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

std::vector<Criterion> criteria() {
  return {
      {"1", "table reproduction", kTableSeconds, table_reproduction},
      {"2", "nonexistence", kNonexistenceSeconds,
       [] { return enumerate_counts({"3", "4", "5", "6", "3,3"}, 0); }},
      {"3", "uniqueness", kUniquenessSeconds,
       [] { return enumerate_counts({"7", "8", "3,4", "4,4", "3,5", "3,3,3"}, 1); }},
      {"4a", "circulant decompositions", kCirculantSeconds, circulant_decompositions},
      {"4b", "circulant certificates", kCirculantSeconds, circulant_certificates},
      {"4c", "stated C11 chromatic numbers", kCirculantSeconds, circulant_c11_values},
      {"5", "C4 u C5 witness", kWitnessSeconds, witness_45},
      {"6", "classification sweep", kSweepSeconds, sweep},
      {"7a", "merge property", 0, merge_property},
      {"7b", "subdivision property", 0, subdivide_property},
      {"7c", "canonical form invariance", 0, canon_invariance},
      {"7d", "canonical form vs brute force", 0, canon_vs_brute_force},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tripack acceptance suite"};
  std::vector<std::string> only;
  app.add_option("criteria", only, "Criterion ids to run (default: all)");
  CLI11_PARSE(app, argc, argv);

  int failed = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0) o = within(o, secs, c.limit);
    if (!o.pass) ++failed;
    std::printf("%s %-3s %-32s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no such criterion\n");
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
