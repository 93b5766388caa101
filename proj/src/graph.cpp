#include "tripack/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace tripack {

SimpleGraph::SimpleGraph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                std::to_string(v));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edge_count_;
}

void SimpleGraph::remove_edge(int u, int v) {
  if (!rows_[u].test(v)) return;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u); v != -1; v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

std::vector<int> SimpleGraph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool SimpleGraph::is_regular(int d) const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != d) return false;
  return true;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  VertexSet seen(n);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    std::vector<int> comp;
    seen.set(s);
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      (g.neighbors(v) - seen).for_each([&](int u) {
        seen.set(u);
        stack.push_back(u);
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return components(g).size() <= 1; }

SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
  SimpleGraph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  SimpleGraph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

}  // namespace tripack
