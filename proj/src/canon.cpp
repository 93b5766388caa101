#include "tripack/canon.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tripack/error.hpp"

namespace tripack {
namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 256;

struct Leaf {
  std::vector<int> position;  // vertex -> canonical position
  std::vector<int> inverse;   // position -> vertex
  std::vector<std::uint64_t> code;
};

/// Search tree over ordered partitions. A colouring assigns each vertex the
/// index of its cell; cells are numbered densely in partition order.
class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& g)
      : g_(g), n_(g.order()), words_(static_cast<std::size_t>((g.order() + 63) / 64)) {}

  const Leaf& run() {
    std::vector<int> color(static_cast<std::size_t>(n_), 0);
    std::vector<int> prefix;
    search(std::move(color), prefix);
    return best_;
  }

 private:
  static int cell_count(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  // Colour refinement to the coarsest equitable partition finer than `color`.
  void refine(std::vector<int>& color) const {
    int cells = cell_count(color);
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
    std::vector<int> order(static_cast<std::size_t>(n_));
    while (cells < n_) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(color[v]);
        g_.neighbors(v).for_each([&](int u) { s.push_back(color[u]); });
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      std::vector<int> next(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      int new_cells = n_ == 0 ? 0 : rank + 1;
      color = std::move(next);
      if (new_cells == cells) break;
      cells = new_cells;
    }
  }

  static std::vector<int> individualize(const std::vector<int>& color, int v) {
    std::vector<int> out(color);
    const int c = color[v];
    for (std::size_t u = 0; u < out.size(); ++u) {
      if (color[u] > c || (color[u] == c && static_cast<int>(u) != v)) ++out[u];
    }
    return out;
  }

  Leaf make_leaf(const std::vector<int>& color) const {
    Leaf leaf;
    leaf.position = color;
    leaf.inverse.assign(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) leaf.inverse[color[v]] = v;
    leaf.code.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t* row = leaf.code.data() + static_cast<std::size_t>(i) * words_;
      g_.neighbors(leaf.inverse[i]).for_each([&](int u) {
        int p = color[u];
        row[p >> 6] |= std::uint64_t{1} << (p & 63);
      });
    }
    return leaf;
  }

  void store_automorphism(const Leaf& leaf, const Leaf& reference) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = reference.inverse[leaf.position[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  void visit_leaf(const std::vector<int>& color) {
    Leaf leaf = make_leaf(color);
    if (!have_leaf_) {
      first_ = leaf;
      best_ = std::move(leaf);
      have_leaf_ = true;
      return;
    }
    if (leaf.code == first_.code) {
      store_automorphism(leaf, first_);
      return;
    }
    if (leaf.code == best_.code) {
      store_automorphism(leaf, best_);
    } else if (leaf.code > best_.code) {
      best_ = std::move(leaf);
    }
  }

  // Orbit representatives under the stored automorphisms fixing `prefix`
  // pointwise.
  std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(std::vector<int> color, std::vector<int>& prefix) {
    refine(color);
    if (cell_count(color) == n_) {
      visit_leaf(color);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;

    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (!explored.empty()) {
        auto orbit = stabilizer_orbits(prefix);
        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                      [&](int w) { return orbit[w] == orbit[v]; });
        if (equivalent) continue;
      }
      explored.push_back(v);
      prefix.push_back(v);
      search(individualize(color, v), prefix);
      prefix.pop_back();
    }
  }

  const SimpleGraph& g_;
  int n_;
  std::size_t words_;
  bool have_leaf_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> automorphisms_;
};

void check_size(const SimpleGraph& g, const CanonLimits& limits) {
  if (g.order() > limits.canonical_max_n)
    throw Error(ErrorCode::SizeExceeded, "canonical form limited to " +
                                             std::to_string(limits.canonical_max_n) +
                                             " vertices, graph has " + std::to_string(g.order()));
}

}  // namespace

std::vector<int> canonical_labeling(const SimpleGraph& g, const CanonLimits& limits) {
  check_size(g, limits);
  if (g.order() == 0) return {};
  Canonizer c(g);
  return c.run().position;
}

CanonicalForm canonical_form(const SimpleGraph& g, const CanonLimits& limits) {
  auto position = canonical_labeling(g, limits);
  CanonicalForm form;
  form.n = g.order();
  for (const Edge& e : g.edges()) form.edges.emplace_back(position[e.u], position[e.v]);
  std::sort(form.edges.begin(), form.edges.end());
  return form;
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b, const CanonLimits& limits) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a, limits) == canonical_form(b, limits);
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::ConnectivityDiffers: return "ConnectivityDiffers";
    case CertificateKind::BipartiteDiffers: return "BipartiteDiffers";
    case CertificateKind::K5PresenceDiffers: return "K5PresenceDiffers";
    case CertificateKind::ChromaticDiffers: return "ChromaticDiffers";
    case CertificateKind::CanonicalFormsDiffer: return "CanonicalFormsDiffer";
  }
  return "?";
}

}  // namespace tripack
