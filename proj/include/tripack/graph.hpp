#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "tripack/vertex_set.hpp"

namespace tripack {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(int x) const { return u == x || v == x; }
  bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Packings label vertices 1..n; union_graph() maps label l to vertex l-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Adding an existing edge is a no-op.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].count(); }

  /// Sorted edge list.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted non-increasing
  bool is_regular(int d) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> rows_;
};

SimpleGraph complement(const SimpleGraph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

/// Image of g under the bijection v -> perm[v].
SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm);

/// Subgraph induced on the given vertices, renumbered in the order given.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices);

}  // namespace tripack
