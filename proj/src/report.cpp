#include "tripack/report.hpp"

#include "tripack/error.hpp"

namespace tripack {

namespace {

template <class Range>
std::vector<int> to_labels(const Range& vertices) {
  std::vector<int> out;
  for (int v : vertices) out.push_back(v + 1);
  return out;
}

std::vector<int> from_labels(const Json& j) {
  std::vector<int> out;
  for (int l : j.get<std::vector<int>>()) out.push_back(l - 1);
  return out;
}

Json form_to_json(const CanonicalForm& f) {
  Json edges = Json::array();
  for (const Edge& e : f.edges) edges.push_back({e.u + 1, e.v + 1});
  return Json{{"n", f.n}, {"edges", std::move(edges)}};
}

CanonicalForm form_from_json(const Json& j) {
  CanonicalForm f;
  f.n = j.at("n").get<int>();
  for (const auto& e : j.at("edges")) f.edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  return f;
}

}  // namespace

Json certificate_to_json(const DistinctnessCertificate& cert) {
  Json w;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConnectivityWitness>) {
          w["component_counts"] = x.component_counts;
        } else if constexpr (std::is_same_v<T, BipartiteWitness>) {
          w["bipartite_graph"] = x.bipartite_graph;
          w["two_coloring"] = x.two_coloring;
          w["odd_cycle"] = to_labels(x.odd_cycle);
        } else if constexpr (std::is_same_v<T, K5Witness>) {
          w["graph_with_k5"] = x.graph_with_k5;
          w["clique"] = to_labels(x.clique);
        } else if constexpr (std::is_same_v<T, ChromaticWitness>) {
          w["chromatic"] = x.chromatic;
          w["coloring"] = x.coloring;
        } else {
          w["forms"] = Json::array({form_to_json(x.forms[0]), form_to_json(x.forms[1])});
        }
      },
      cert.witness);
  Json j;
  j["kind"] = to_string(cert.kind());
  j["witness"] = std::move(w);
  return j;
}

DistinctnessCertificate certificate_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const Json& w = j.at("witness");
    DistinctnessCertificate c;
    if (kind == to_string(CertificateKind::ConnectivityDiffers)) {
      c.witness = ConnectivityWitness{w.at("component_counts").get<std::array<int, 2>>()};
    } else if (kind == to_string(CertificateKind::BipartiteDiffers)) {
      c.witness = BipartiteWitness{w.at("bipartite_graph").get<int>(),
                                   w.at("two_coloring").get<std::vector<int>>(),
                                   from_labels(w.at("odd_cycle"))};
    } else if (kind == to_string(CertificateKind::K5PresenceDiffers)) {
      K5Witness k{w.at("graph_with_k5").get<int>(), {}};
      auto clique = from_labels(w.at("clique"));
      if (clique.size() != 5) throw Error(ErrorCode::Parse, "K5 witness needs five vertices");
      std::copy(clique.begin(), clique.end(), k.clique.begin());
      c.witness = k;
    } else if (kind == to_string(CertificateKind::ChromaticDiffers)) {
      c.witness = ChromaticWitness{w.at("chromatic").get<std::array<int, 2>>(),
                                   w.at("coloring").get<std::vector<int>>()};
    } else if (kind == to_string(CertificateKind::CanonicalFormsDiffer)) {
      const Json& forms = w.at("forms");
      c.witness = CanonicalWitness{{form_from_json(forms.at(0)), form_from_json(forms.at(1))}};
    } else {
      throw Error(ErrorCode::Parse, "unknown certificate kind \"" + kind + "\"");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed certificate: ") + e.what());
  }
}

Json outcome_to_json(const PackingOutcome& outcome) {
  Json j;
  j["outcome"] = to_string(outcome_class(outcome));
  if (const auto* u = std::get_if<Unique>(&outcome)) {
    j["packing"] = to_json(u->packing);
  } else if (const auto* p = std::get_if<Pair>(&outcome)) {
    j["method"] = p->method;
    j["packings"] = Json::array({to_json(p->first), to_json(p->second)});
    j["certificate"] = certificate_to_json(p->certificate);
  }
  return j;
}

Json enumeration_to_json(const EnumerationResult& r) {
  Json j;
  j["shape"] = r.shape.lengths();
  j["count"] = r.count_union_classes;
  j["exhaustive"] = r.exhaustive;
  j["packings_seen"] = r.packings_seen;
  Json reps = Json::array();
  for (const auto& p : r.representatives) reps.push_back(to_json(p));
  j["representatives"] = std::move(reps);
  return j;
}

}  // namespace tripack
