#include <deque>

#include "tripack/construct.hpp"
#include "tripack/error.hpp"

namespace tripack {

namespace {

// Blue neighbours of each label (1-based).
std::vector<std::array<int, 2>> blue_neighbors(const TriplePacking& p) {
  std::vector<std::array<int, 2>> nb(static_cast<std::size_t>(p.n) + 1);
  for (const Cycle& c : p.copies[kBlue].cycles) {
    const std::size_t len = c.size();
    for (std::size_t i = 0; i < len; ++i) nb[c[i]] = {c[(i + len - 1) % len], c[(i + 1) % len]};
  }
  return nb;
}

bool connected_within(const SimpleGraph& g, const std::vector<int>& part) {
  VertexSet inside(g.order());
  for (int v : part) inside.set(v);
  VertexSet seen(g.order());
  std::deque<int> queue{part.front()};
  seen.set(part.front());
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ((g.neighbors(v) & inside) - seen).for_each([&](int w) {
      seen.set(w);
      queue.push_back(w);
      ++reached;
    });
  }
  return reached == static_cast<int>(part.size());
}

// A label x in the component whose two blue edges can be deleted without
// disconnecting the component.
int removable_vertex(const TriplePacking& p, const SimpleGraph& u, const std::vector<int>& part) {
  const auto blue = blue_neighbors(p);
  for (int v : part) {
    const int x = v + 1;
    SimpleGraph h = u;
    for (int y : blue[x]) h.remove_edge(v, y - 1);
    if (connected_within(h, part)) return x;
  }
  throw Error(ErrorCode::MergeFailed, "no vertex of the component can give up its blue edges");
}

}  // namespace

TriplePacking merge_step(const TriplePacking& input) {
  const auto report = validate_packing(input);
  if (!report.ok()) throw Error(ErrorCode::InvalidPacking, report.violations.front().detail);
  TriplePacking p = input;
  const SimpleGraph u = union_graph(p);
  const auto parts = components(u);
  if (parts.size() <= 1) return p;
  const int x1 = removable_vertex(p, u, parts[0]);
  const int x2 = removable_vertex(p, u, parts[1]);
  for (Cycle& c : p.copies[kBlue].cycles)
    for (int& v : c) {
      if (v == x1)
        v = x2;
      else if (v == x2)
        v = x1;
    }
  p.copies[kBlue] = normalize_placement(std::move(p.copies[kBlue]));
  return p;
}

TriplePacking merge_components(const TriplePacking& input) {
  TriplePacking p = merge_step(input);
  while (!is_connected(union_graph(p))) p = merge_step(p);
  return p;
}

}  // namespace tripack
