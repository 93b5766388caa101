#include <algorithm>
#include <set>

#include "tripack/canon.hpp"

namespace tripack {

std::optional<DistinctnessCertificate> certify_distinct(const SimpleGraph& a, const SimpleGraph& b,
                                                        const CanonLimits& limits) {
  const std::array<const SimpleGraph*, 2> g{&a, &b};

  ConnectivityWitness conn;
  for (int i = 0; i < 2; ++i) conn.component_counts[i] = static_cast<int>(components(*g[i]).size());
  if (conn.component_counts[0] != conn.component_counts[1]) return DistinctnessCertificate{conn};

  std::array<BipartiteResult, 2> bip{check_bipartite(a), check_bipartite(b)};
  if (bip[0].bipartite != bip[1].bipartite) {
    int which = bip[0].bipartite ? 0 : 1;
    return DistinctnessCertificate{BipartiteWitness{which, std::move(bip[which].two_coloring),
                                                    std::move(bip[1 - which].odd_cycle)}};
  }

  std::array<std::optional<std::array<int, 5>>, 2> k5{find_k5(a), find_k5(b)};
  if (k5[0].has_value() != k5[1].has_value()) {
    int which = k5[0] ? 0 : 1;
    return DistinctnessCertificate{K5Witness{which, *k5[which]}};
  }

  if (a.order() <= limits.chromatic_max_n && b.order() <= limits.chromatic_max_n) {
    std::array<std::vector<int>, 2> coloring;
    ChromaticWitness chi;
    for (int i = 0; i < 2; ++i) chi.chromatic[i] = chromatic_number(*g[i], limits, &coloring[i]);
    if (chi.chromatic[0] != chi.chromatic[1]) {
      int smaller = chi.chromatic[0] < chi.chromatic[1] ? 0 : 1;
      chi.coloring = std::move(coloring[smaller]);
      return DistinctnessCertificate{std::move(chi)};
    }
  }

  CanonicalWitness canon{{canonical_form(a, limits), canonical_form(b, limits)}};
  if (canon.forms[0] != canon.forms[1]) return DistinctnessCertificate{std::move(canon)};
  return std::nullopt;
}

namespace {

bool proper_coloring(const SimpleGraph& g, const std::vector<int>& coloring, int colors) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (int c : coloring)
    if (c < 0 || c >= colors) return false;
  for (const Edge& e : g.edges())
    if (coloring[e.u] == coloring[e.v]) return false;
  return true;
}

bool is_cycle_in(const SimpleGraph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) return false;
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) return false;
  for (int v : cycle)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

bool brute_force_has_k5(const SimpleGraph& g) {
  const int n = g.order();
  int s[5];
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1]) {
      if (!g.adjacent(s[0], s[1])) continue;
      for (s[2] = s[1] + 1; s[2] < n; ++s[2]) {
        if (!g.adjacent(s[0], s[2]) || !g.adjacent(s[1], s[2])) continue;
        for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
          if (!g.adjacent(s[0], s[3]) || !g.adjacent(s[1], s[3]) || !g.adjacent(s[2], s[3]))
            continue;
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) ok = g.adjacent(s[i], s[4]);
            if (ok) return true;
          }
        }
      }
    }
  return false;
}

}  // namespace

bool verify_certificate(const DistinctnessCertificate& cert, const SimpleGraph& a,
                        const SimpleGraph& b, const CanonLimits& limits) {
  const std::array<const SimpleGraph*, 2> g{&a, &b};
  switch (cert.kind()) {
    case CertificateKind::ConnectivityDiffers: {
      const auto& w = std::get<ConnectivityWitness>(cert.witness);
      for (int i = 0; i < 2; ++i)
        if (static_cast<int>(components(*g[i]).size()) != w.component_counts[i]) return false;
      return w.component_counts[0] != w.component_counts[1];
    }
    case CertificateKind::BipartiteDiffers: {
      const auto& w = std::get<BipartiteWitness>(cert.witness);
      if (w.bipartite_graph != 0 && w.bipartite_graph != 1) return false;
      return proper_coloring(*g[w.bipartite_graph], w.two_coloring, 2) &&
             is_cycle_in(*g[1 - w.bipartite_graph], w.odd_cycle) && w.odd_cycle.size() % 2 == 1;
    }
    case CertificateKind::K5PresenceDiffers: {
      const auto& w = std::get<K5Witness>(cert.witness);
      if (w.graph_with_k5 != 0 && w.graph_with_k5 != 1) return false;
      const SimpleGraph& with = *g[w.graph_with_k5];
      std::set<int> distinct(w.clique.begin(), w.clique.end());
      if (distinct.size() != 5) return false;
      for (int i = 0; i < 5; ++i) {
        if (w.clique[i] < 0 || w.clique[i] >= with.order()) return false;
        for (int j = i + 1; j < 5; ++j)
          if (!with.adjacent(w.clique[i], w.clique[j])) return false;
      }
      return !brute_force_has_k5(*g[1 - w.graph_with_k5]);
    }
    case CertificateKind::ChromaticDiffers: {
      const auto& w = std::get<ChromaticWitness>(cert.witness);
      if (w.chromatic[0] == w.chromatic[1]) return false;
      int smaller = w.chromatic[0] < w.chromatic[1] ? 0 : 1;
      int larger = 1 - smaller;
      if (!proper_coloring(*g[smaller], w.coloring, w.chromatic[smaller])) return false;
      return !is_k_colorable(*g[larger], w.chromatic[larger] - 1);
    }
    case CertificateKind::CanonicalFormsDiffer: {
      const auto& w = std::get<CanonicalWitness>(cert.witness);
      return w.forms[0] != w.forms[1] && canonical_form(a, limits) == w.forms[0] &&
             canonical_form(b, limits) == w.forms[1];
    }
  }
  return false;
}

}  // namespace tripack
