#include <algorithm>
#include <deque>
#include <string>

#include "tripack/canon.hpp"
#include "tripack/error.hpp"

namespace tripack {
namespace {

bool extend_clique(const SimpleGraph& g, VertexSet candidates, std::vector<int>& clique, int k) {
  if (static_cast<int>(clique.size()) == k) return true;
  if (static_cast<int>(clique.size()) + candidates.count() < k) return false;
  for (int v = candidates.first(); v != -1; v = candidates.next(v)) {
    candidates.reset(v);
    clique.push_back(v);
    if (extend_clique(g, candidates & g.neighbors(v), clique, k)) return true;
    clique.pop_back();
    if (static_cast<int>(clique.size()) + candidates.count() < k) return false;
  }
  return false;
}

/// DSATUR backtracking for a fixed palette size.
class ColoringSearch {
 public:
  ColoringSearch(const SimpleGraph& g, int k)
      : g_(g), n_(g.order()), k_(k), color_(static_cast<std::size_t>(n_), -1),
        forbid_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k), 0),
        saturation_(static_cast<std::size_t>(n_), 0) {}

  bool solve() { return assign_next(0, 0); }
  const std::vector<int>& coloring() const { return color_; }

 private:
  int& forbid(int v, int c) { return forbid_[static_cast<std::size_t>(v) * k_ + c]; }

  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      int deg = 0;
      g_.neighbors(v).for_each([&](int u) { deg += color_[u] == -1; });
      if (saturation_[v] > best_sat || (saturation_[v] == best_sat && deg > best_deg)) {
        best = v;
        best_sat = saturation_[v];
        best_deg = deg;
      }
    }
    return best;
  }

  bool apply(int v, int c) {
    color_[v] = c;
    bool alive = true;
    g_.neighbors(v).for_each([&](int u) {
      if (forbid(u, c)++ == 0) {
        ++saturation_[u];
        if (color_[u] == -1 && saturation_[u] == k_) alive = false;
      }
    });
    return alive;
  }

  void undo(int v, int c) {
    g_.neighbors(v).for_each([&](int u) {
      if (--forbid(u, c) == 0) --saturation_[u];
    });
    color_[v] = -1;
  }

  bool assign_next(int colored, int used) {
    if (colored == n_) return true;
    int v = pick();
    int limit = std::min(k_ - 1, used);
    for (int c = 0; c <= limit; ++c) {
      if (forbid(v, c) != 0) continue;
      bool alive = apply(v, c);
      if (alive && assign_next(colored + 1, std::max(used, c + 1))) return true;
      undo(v, c);
    }
    return false;
  }

  const SimpleGraph& g_;
  int n_;
  int k_;
  std::vector<int> color_;
  std::vector<int> forbid_;
  std::vector<int> saturation_;
};

}  // namespace

std::optional<std::vector<int>> find_clique(const SimpleGraph& g, int k) {
  std::vector<int> clique;
  if (k <= 0) return clique;
  VertexSet all(g.order());
  for (int v = 0; v < g.order(); ++v) all.set(v);
  if (extend_clique(g, all, clique, k)) return clique;
  return std::nullopt;
}

std::optional<std::array<int, 5>> find_k5(const SimpleGraph& g) {
  auto c = find_clique(g, 5);
  if (!c) return std::nullopt;
  std::array<int, 5> out{};
  std::copy(c->begin(), c->end(), out.begin());
  return out;
}

int clique_number(const SimpleGraph& g) {
  int k = g.order() == 0 ? 0 : 1;
  while (k < g.order() && find_clique(g, k + 1)) ++k;
  return k;
}

bool is_k_colorable(const SimpleGraph& g, int k, std::vector<int>* coloring) {
  if (g.order() == 0) {
    if (coloring) coloring->clear();
    return true;
  }
  if (k <= 0) return false;
  ColoringSearch search(g, k);
  if (!search.solve()) return false;
  if (coloring) *coloring = search.coloring();
  return true;
}

std::vector<int> greedy_coloring(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> seen(static_cast<std::size_t>(n), VertexSet(n + 1));
  for (int step = 0; step < n; ++step) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      int sat = seen[v].count();
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int c = 0;
    while (seen[best].test(c)) ++c;
    color[best] = c;
    g.neighbors(best).for_each([&](int u) { seen[u].set(c); });
  }
  return color;
}

int chromatic_number(const SimpleGraph& g, const CanonLimits& limits, std::vector<int>* coloring) {
  if (g.order() > limits.chromatic_max_n)
    throw Error(ErrorCode::SizeExceeded, "chromatic number limited to " +
                                             std::to_string(limits.chromatic_max_n) +
                                             " vertices, graph has " + std::to_string(g.order()));
  if (g.order() == 0) {
    if (coloring) coloring->clear();
    return 0;
  }
  std::vector<int> greedy = greedy_coloring(g);
  int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  for (int k = clique_number(g); k < upper; ++k) {
    std::vector<int> c;
    if (is_k_colorable(g, k, &c)) {
      if (coloring) *coloring = std::move(c);
      return k;
    }
  }
  if (coloring) *coloring = std::move(greedy);
  return upper;
}

BipartiteResult check_bipartite(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          // Same BFS depth; climb both to their lowest common ancestor.
          std::vector<int> left{v}, right{u};
          int a = v, b = u;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          BipartiteResult r;
          r.odd_cycle = std::move(left);
          r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
          return r;
        }
      }
    }
  }
  BipartiteResult r;
  r.bipartite = true;
  r.two_coloring = std::move(side);
  return r;
}

}  // namespace tripack
