#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

/// Size bounds for the exact (worst-case exponential) routines.
struct CanonLimits {
  int canonical_max_n = 64;
  int chromatic_max_n = 48;
};

/// Edge list of the graph relabelled by its canonical ordering. Two graphs
/// are isomorphic iff their forms compare equal.
struct CanonicalForm {
  int n = 0;
  std::vector<Edge> edges;  // sorted, u < v

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Individualization-refinement canonical labelling with automorphism
/// pruning. Throws Error(SizeExceeded) above limits.canonical_max_n.
CanonicalForm canonical_form(const SimpleGraph& g, const CanonLimits& limits = {});

/// canonical_labeling(g)[v] is v's position in the canonical ordering.
std::vector<int> canonical_labeling(const SimpleGraph& g, const CanonLimits& limits = {});

/// Degree sequences are compared first; canonical forms only when they agree.
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, const CanonLimits& limits = {});

/// Lexicographically first k-clique, if any.
std::optional<std::vector<int>> find_clique(const SimpleGraph& g, int k);
std::optional<std::array<int, 5>> find_k5(const SimpleGraph& g);
int clique_number(const SimpleGraph& g);

/// Exact k-colourability. On success and when colouring != nullptr, writes a
/// proper colouring with values 0..k-1.
bool is_k_colorable(const SimpleGraph& g, int k, std::vector<int>* coloring = nullptr);

/// DSATUR greedy colouring; the result is proper but not necessarily optimal.
std::vector<int> greedy_coloring(const SimpleGraph& g);

/// Exact chromatic number: clique lower bound, greedy upper bound, then
/// k-colourability tests upward. Throws Error(SizeExceeded) above
/// limits.chromatic_max_n.
int chromatic_number(const SimpleGraph& g, const CanonLimits& limits = {},
                     std::vector<int>* coloring = nullptr);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> two_coloring;  // side 0/1 per vertex, when bipartite
  std::vector<int> odd_cycle;     // vertex sequence, when not bipartite
};

BipartiteResult check_bipartite(const SimpleGraph& g);
inline bool is_bipartite(const SimpleGraph& g) { return check_bipartite(g).bipartite; }

enum class CertificateKind {
  ConnectivityDiffers,
  BipartiteDiffers,
  K5PresenceDiffers,
  ChromaticDiffers,
  CanonicalFormsDiffer,
};

std::string_view to_string(CertificateKind kind);

struct ConnectivityWitness {
  std::array<int, 2> component_counts{};
};

/// bipartite_graph (0 or 1) names the bipartite graph; the other carries an
/// odd cycle.
struct BipartiteWitness {
  int bipartite_graph = 0;
  std::vector<int> two_coloring;
  std::vector<int> odd_cycle;
};

/// graph_with_k5 (0 or 1) names the graph containing the clique; its absence
/// in the other is re-checked exhaustively by the verifier.
struct K5Witness {
  int graph_with_k5 = 0;
  std::array<int, 5> clique{};
};

/// Colouring of the graph with the smaller chromatic number; the verifier
/// re-runs exact non-colourability of the other at its value minus one.
struct ChromaticWitness {
  std::array<int, 2> chromatic{};
  std::vector<int> coloring;
};

struct CanonicalWitness {
  std::array<CanonicalForm, 2> forms;
};

struct DistinctnessCertificate {
  std::variant<ConnectivityWitness, BipartiteWitness, K5Witness, ChromaticWitness,
               CanonicalWitness>
      witness;

  CertificateKind kind() const { return static_cast<CertificateKind>(witness.index()); }
};

/// Tries connectivity, bipartiteness, K5 presence, chromatic number and the
/// canonical form, in that order, and returns the first that separates the
/// graphs; nullopt when they are isomorphic. Chromatic numbers are skipped
/// for graphs above limits.chromatic_max_n.
std::optional<DistinctnessCertificate> certify_distinct(const SimpleGraph& a,
                                                        const SimpleGraph& b,
                                                        const CanonLimits& limits = {});

/// Independent check of a certificate against the two graphs.
bool verify_certificate(const DistinctnessCertificate& cert, const SimpleGraph& a,
                        const SimpleGraph& b, const CanonLimits& limits = {});

}  // namespace tripack
