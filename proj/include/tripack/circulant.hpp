#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "tripack/canon.hpp"
#include "tripack/deadline.hpp"
#include "tripack/graph.hpp"
#include "tripack/packing.hpp"

namespace tripack {

/// C_n(a,b,c): vertices Z_n, x adjacent to x+-a, x+-b, x+-c.
struct CirculantSpec {
  int n = 0;
  std::array<int, 3> generators{};

  std::string to_string() const;
  bool operator==(const CirculantSpec&) const = default;
  auto operator<=>(const CirculantSpec&) const = default;
};

/// Throws Error(InvalidGenerators) unless 1 <= a < b < c < n, no generator
/// equals n/2 and no two generators are negatives of each other mod n (the
/// conditions for the graph to be 6-regular).
void validate_circulant(const CirculantSpec& spec);

bool is_connected_circulant(const CirculantSpec& spec);

/// Vertex x of Z_n is vertex x of the graph.
SimpleGraph build_circulant(const CirculantSpec& spec);

/// Isomorphism of two circulants of equal order: multiplier equivalence
/// first, canonical forms when the order is within limits.
bool circulants_isomorphic(const CirculantSpec& a, const CirculantSpec& b,
                           const CanonLimits& limits = {});

/// Chromatic number from the classification of connected 6-regular
/// circulants C_n(a,b,c) with c = a+b or n-c = a+b (in some ordering of the
/// generators). nullopt when the spec is outside that family. The table
/// misses the 5-chromatic class of C25(1,9,10) (also C25(1,10,11),
/// C25(2,3,5), ...); for it this returns the table's 4.
std::optional<int> predicted_chromatic_number(const CirculantSpec& spec);

/// Two non-isomorphic 6-regular circulants of order n >= 9, both with
/// generator 1. For 4 | n: C_n(1,3,5) (bipartite) and C_n(1,3,4). Otherwise
/// C_n(1,2,3) and C_n(1,4,5) when the latter is a valid 6-regular graph with
/// a different chromatic number; for the orders where it is not (9, 10, 11,
/// 13, 14, 17) the first (1,b,c) in lexicographic order with a different
/// chromatic number replaces it, trying the (1,b,b+1) family first. When no
/// companion differs in chromatic number (n = 10) the first non-isomorphic
/// one is used.
/// Throws Error(OrderTooSmall) for n < 9.
std::pair<CirculantSpec, CirculantSpec> select_generator_pair(int n);

/// Splits the circulant's edges into three Hamiltonian cycles returned as a
/// packing of three copies of C_n (label x+1 for vertex x). Uses rotation
/// cycles x -> x+s when every generator is a unit mod n; otherwise keeps the
/// rotation of the first unit generator and searches the 4-regular
/// remainder. Throws Error(DecompositionNotFound) or Error(Timeout).
TriplePacking hamiltonian_decomposition(const CirculantSpec& spec,
                                        const Deadline& deadline = Deadline::seconds(60));

/// Edge-disjoint Hamiltonian cycles covering a 2k-regular graph, found by
/// deterministic backtracking over edges in sorted order; each cycle is a
/// vertex sequence. nullopt when none exists; throws Error(Timeout).
std::optional<std::vector<std::vector<int>>> split_into_hamiltonian_cycles(
    const SimpleGraph& g, int k, const Deadline& deadline = {});

}  // namespace tripack
