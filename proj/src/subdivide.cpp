#include <algorithm>
#include <set>

#include "tripack/construct.hpp"
#include "tripack/error.hpp"

namespace tripack {

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Position i with {c[i], c[i+1]} == e, or -1.
int edge_position(const Cycle& c, const Edge& e) {
  const std::size_t len = c.size();
  for (std::size_t i = 0; i < len; ++i)
    if (Edge(c[i], c[(i + 1) % len]) == e) return static_cast<int>(i);
  return -1;
}

bool copy_has_edge(const TriplePacking& p, int copy, const Edge& e) {
  for (const Cycle& c : p.copies[copy].cycles)
    if (edge_position(c, e) >= 0) return true;
  return false;
}

}  // namespace

TriplePacking subdivide_matching(const TriplePacking& p, const TargetCycles& targets,
                                 const Edge& e1, const Edge& e2, const Edge& e3) {
  const auto report = validate_packing(p);
  if (!report.ok()) throw Error(ErrorCode::InvalidPacking, report.violations.front().detail);

  int q = -1;
  for (int c = 0; c < 3; ++c) {
    const auto& cycles = p.copies[c].cycles;
    if (targets[c] < 0 || targets[c] >= static_cast<int>(cycles.size()))
      throw Error(ErrorCode::InvalidPacking, "target cycle index out of range in " +
                                                 std::string(color_name(c)) + " copy");
    const int len = static_cast<int>(cycles[targets[c]].size());
    if (q >= 0 && len != q)
      throw Error(ErrorCode::InvalidPacking, "target cycles have different lengths");
    q = len;
  }

  std::set<int> ends{e1.u, e1.v, e2.u, e2.v, e3.u, e3.v};
  if (ends.size() != 6)
    throw Error(ErrorCode::EdgesNotIndependent, "edges " + edge_text(e1) + ", " + edge_text(e2) +
                                                    ", " + edge_text(e3) + " share a vertex");

  // e1 is black, e2 blue, e3 red.
  const std::array<std::pair<int, Edge>, 3> jobs{{{kBlack, e1}, {kBlue, e2}, {kRed, e3}}};
  const int w = p.n + 1;
  TriplePacking out = p;
  out.n = w;
  for (const auto& [copy, e] : jobs) {
    Cycle& cyc = out.copies[copy].cycles[targets[copy]];
    const int pos = edge_position(cyc, e);
    if (pos < 0) {
      for (int other = 0; other < 3; ++other)
        if (other != copy && copy_has_edge(p, other, e))
          throw Error(ErrorCode::WrongColor, "edge " + edge_text(e) + " is " +
                                                 std::string(color_name(other)) + ", expected " +
                                                 std::string(color_name(copy)));
      throw Error(ErrorCode::EdgeNotOnTargetCycle,
                  "edge " + edge_text(e) + " is not on the target " +
                      std::string(color_name(copy)) + " cycle");
    }
    cyc.insert(cyc.begin() + pos + 1, w);
  }

  std::vector<int> lengths = p.shape.lengths();
  *std::find(lengths.begin(), lengths.end(), q) += 1;
  out.shape = TwoFactorShape(lengths);
  return normalized(std::move(out));
}

}  // namespace tripack
