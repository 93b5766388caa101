#include "tripack/io.hpp"

#include <algorithm>
#include <sstream>

#include "tripack/error.hpp"

namespace tripack {

Json to_json(const TriplePacking& p) {
  Json copies = Json::array();
  for (const auto& placement : p.copies) {
    Json cyc = Json::array();
    for (const auto& c : placement.cycles) cyc.push_back(c);
    copies.push_back(std::move(cyc));
  }
  Json j;
  j["n"] = p.n;
  j["shape"] = p.shape.lengths();
  j["copies"] = std::move(copies);
  return j;
}

TriplePacking packing_from_json(const Json& j) {
  try {
    TriplePacking p;
    const auto& copies = j.at("copies");
    if (!copies.is_array() || copies.size() != 3)
      throw Error(ErrorCode::Parse, "\"copies\" must hold exactly three placements");
    for (int c = 0; c < 3; ++c)
      for (const auto& cyc : copies[c]) p.copies[c].cycles.push_back(cyc.get<Cycle>());
    if (j.contains("shape"))
      p.shape = TwoFactorShape(j.at("shape").get<std::vector<int>>());
    else
      p.shape = TwoFactorShape(p.copies[kBlack].lengths());
    p.n = j.contains("n") ? j.at("n").get<int>() : p.shape.order();
    return p;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string to_edge_list(const TriplePacking& p) {
  std::ostringstream out;
  for (int c = 0; c < 3; ++c)
    for (const Edge& e : copy_edges(p, c)) out << e.u << ' ' << e.v << ' ' << (c + 1) << '\n';
  return out.str();
}

TriplePacking packing_from_edge_list(std::string_view text) {
  std::array<std::vector<Edge>, 3> edges;
  int n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int u = 0, v = 0, c = 0;
    std::string rest;
    if (!(ls >> u >> v >> c) || (ls >> rest))
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected 'u v c'");
    if (c < 1 || c > 3 || u < 1 || v < 1 || u == v)
      throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": bad edge or colour");
    edges[c - 1].emplace_back(u, v);
    n = std::max({n, u, v});
  }
  TriplePacking p;
  p.n = n;
  for (int c = 0; c < 3; ++c) p.copies[c] = placement_from_edges(n, edges[c]);
  p.shape = TwoFactorShape(p.copies[kBlack].lengths());
  return p;
}

std::string to_dot(const TriplePacking& p, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (int v = 1; v <= p.n; ++v) out << "  " << v << ";\n";
  for (int c = 0; c < 3; ++c)
    for (const Edge& e : copy_edges(p, c))
      out << "  " << e.u << " -- " << e.v << " [color=" << color_name(c) << "];\n";
  out << "}\n";
  return out.str();
}

TriplePacking read_packing(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    return packing_from_json(j);
  }
  return packing_from_edge_list(text);
}

Json validation_to_json(const ValidationReport& r) {
  Json j;
  j["valid"] = r.ok();
  Json list = Json::array();
  for (const auto& v : r.violations) {
    Json item;
    item["kind"] = std::string(to_string(v.kind));
    item["copies"] = v.copies;
    item["detail"] = v.detail;
    list.push_back(std::move(item));
  }
  j["violations"] = std::move(list);
  return j;
}

}  // namespace tripack
