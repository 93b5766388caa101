#include "tripack/packing.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>

#include "tripack/error.hpp"

namespace tripack {

TwoFactorShape::TwoFactorShape(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw Error(ErrorCode::InvalidShape, "a 2-factor needs at least one cycle");
  std::sort(lengths_.begin(), lengths_.end());
  if (lengths_.front() < 3)
    throw Error(ErrorCode::InvalidShape,
                "cycle length " + std::to_string(lengths_.front()) + " is below 3");
  for (int l : lengths_) order_ += l;
}

TwoFactorShape TwoFactorShape::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::InvalidShape, "cannot parse shape '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return TwoFactorShape(std::move(out));
}

int TwoFactorShape::count(int length) const {
  return static_cast<int>(std::count(lengths_.begin(), lengths_.end(), length));
}

std::string TwoFactorShape::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lengths_[i]);
  }
  return s;
}

TwoFactorShape operator+(const TwoFactorShape& a, const TwoFactorShape& b) {
  std::vector<int> l = a.lengths();
  l.insert(l.end(), b.lengths().begin(), b.lengths().end());
  return TwoFactorShape(std::move(l));
}

std::vector<TwoFactorShape> shapes_of_order(int n) {
  std::vector<TwoFactorShape> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int min_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      if (remaining - p != 0 && remaining - p < p) continue;
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  if (n >= 3) rec(n, 3);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> CyclePlacement::lengths() const {
  std::vector<int> l;
  for (const auto& c : cycles) l.push_back(static_cast<int>(c.size()));
  std::sort(l.begin(), l.end());
  return l;
}

std::string_view color_name(int copy) {
  switch (copy) {
    case kBlack: return "black";
    case kRed: return "red";
    case kBlue: return "blue";
  }
  return "?";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ShapeMismatch: return "ShapeMismatch";
    case ViolationKind::VertexCoverage: return "VertexCoverage";
    case ViolationKind::EdgeOverlap: return "EdgeOverlap";
    case ViolationKind::DegenerateCycle: return "DegenerateCycle";
  }
  return "?";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  const std::size_t len = c.size();
  if (len < 2) return out;
  for (std::size_t i = 0; i < len; ++i) {
    int a = c[i];
    int b = c[(i + 1) % len];
    if (a != b) out.emplace_back(a, b);
  }
  if (len == 2) out.pop_back();
  return out;
}

std::vector<Edge> copy_edges(const TriplePacking& p, int copy) {
  std::vector<Edge> out;
  for (const auto& c : p.copies[copy].cycles) {
    auto e = cycle_edges(c);
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate_packing(const TriplePacking& p) {
  ValidationReport report;
  auto add = [&](ViolationKind k, std::vector<int> copies, std::string detail) {
    report.violations.push_back({k, std::move(copies), std::move(detail)});
  };

  if (p.shape.order() != p.n)
    add(ViolationKind::ShapeMismatch, {},
        "shape order " + std::to_string(p.shape.order()) + " differs from n=" + std::to_string(p.n));

  for (int c = 0; c < 3; ++c) {
    const auto& placement = p.copies[c];
    const std::string who = "copy " + std::to_string(c + 1) + " (" + std::string(color_name(c)) + ")";
    for (std::size_t i = 0; i < placement.cycles.size(); ++i) {
      const Cycle& cyc = placement.cycles[i];
      std::set<int> distinct(cyc.begin(), cyc.end());
      if (cyc.size() < 3)
        add(ViolationKind::DegenerateCycle, {c + 1},
            who + " cycle " + std::to_string(i + 1) + " has length " + std::to_string(cyc.size()));
      else if (distinct.size() != cyc.size())
        add(ViolationKind::DegenerateCycle, {c + 1},
            who + " cycle " + std::to_string(i + 1) + " repeats a vertex");
    }
    if (placement.lengths() != p.shape.lengths())
      add(ViolationKind::ShapeMismatch, {c + 1}, who + " cycle lengths differ from shape");

    std::map<int, int> seen;
    for (const auto& cyc : placement.cycles)
      for (int v : cyc) ++seen[v];
    std::vector<std::string> problems;
    for (auto [v, k] : seen) {
      if (v < 1 || v > p.n) problems.push_back("label " + std::to_string(v) + " out of range");
      else if (k > 1) problems.push_back("label " + std::to_string(v) + " used " + std::to_string(k) + " times");
    }
    for (int v = 1; v <= p.n; ++v)
      if (!seen.contains(v)) problems.push_back("label " + std::to_string(v) + " missing");
    for (auto& pr : problems) add(ViolationKind::VertexCoverage, {c + 1}, who + ": " + pr);
  }

  std::array<std::vector<Edge>, 3> edges;
  for (int c = 0; c < 3; ++c) edges[c] = copy_edges(p, c);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      std::vector<Edge> common;
      std::set_intersection(edges[a].begin(), edges[a].end(), edges[b].begin(), edges[b].end(),
                            std::back_inserter(common));
      common.erase(std::unique(common.begin(), common.end()), common.end());
      for (const Edge& e : common)
        add(ViolationKind::EdgeOverlap, {a + 1, b + 1},
            "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " in " +
                std::string(color_name(a)) + " and " + std::string(color_name(b)));
    }
  return report;
}

SimpleGraph union_graph(const TriplePacking& p) {
  auto report = validate_packing(p);
  if (!report.ok()) throw Error(ErrorCode::InvalidPacking, report.violations.front().detail);
  SimpleGraph g(p.n);
  for (int c = 0; c < 3; ++c)
    for (const Edge& e : copy_edges(p, c)) g.add_edge(e.u - 1, e.v - 1);
  return g;
}

Cycle normalize_cycle(Cycle c) {
  if (c.size() < 3) return c;
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

CyclePlacement normalize_placement(CyclePlacement p) {
  for (auto& c : p.cycles) c = normalize_cycle(std::move(c));
  std::stable_sort(p.cycles.begin(), p.cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.empty()) return false;
    return a.front() < b.front();
  });
  return p;
}

TriplePacking normalized(TriplePacking p) {
  for (auto& c : p.copies) c = normalize_placement(std::move(c));
  return p;
}

CyclePlacement identity_placement(const TwoFactorShape& shape) {
  CyclePlacement out;
  int next = 1;
  for (int len : shape.lengths()) {
    Cycle c;
    for (int i = 0; i < len; ++i) c.push_back(next++);
    out.cycles.push_back(std::move(c));
  }
  return out;
}

TriplePacking disjoint_union(const TriplePacking& a, const TriplePacking& b) {
  TriplePacking out;
  out.n = a.n + b.n;
  out.shape = a.shape + b.shape;
  for (int c = 0; c < 3; ++c) {
    out.copies[c] = a.copies[c];
    for (Cycle cyc : b.copies[c].cycles) {
      for (int& v : cyc) v += a.n;
      out.copies[c].cycles.push_back(std::move(cyc));
    }
  }
  return normalized(std::move(out));
}

CyclePlacement placement_from_edges(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : edges) {
    if (e.u < 1 || e.v > n || e.u == e.v)
      throw Error(ErrorCode::Parse, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " outside labels 1.." + std::to_string(n));
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int v = 1; v <= n; ++v)
    if (adj[v].size() != 2)
      throw Error(ErrorCode::InvalidPacking, "label " + std::to_string(v) + " has degree " +
                                        std::to_string(adj[v].size()) + " in one colour class");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  CyclePlacement out;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    Cycle c{s};
    seen[s] = true;
    int prev = s;
    int cur = adj[s][0];
    while (cur != s) {
      if (seen[cur]) throw Error(ErrorCode::InvalidPacking, "colour class is not a union of cycles");
      seen[cur] = true;
      c.push_back(cur);
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
    }
    out.cycles.push_back(std::move(c));
  }
  return normalize_placement(std::move(out));
}

}  // namespace tripack
