#include <algorithm>
#include <map>
#include <set>

#include "tripack/circulant.hpp"
#include "tripack/construct.hpp"
#include "tripack/error.hpp"

namespace tripack {

namespace {

bool part_packable(const std::vector<int>& lengths) {
  int order = 0;
  for (int l : lengths) order += l;
  return !lengths.empty() && order >= 7;
}

// All sub-multisets of the shape as sorted length vectors.
void sub_multisets(const std::vector<std::pair<int, int>>& counts, std::size_t i,
                   std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i == counts.size()) {
    out.push_back(cur);
    return;
  }
  const auto [len, cnt] = counts[i];
  for (int take = 0; take <= cnt; ++take) {
    sub_multisets(counts, i + 1, cur, out);
    cur.push_back(len);
  }
  cur.resize(cur.size() - static_cast<std::size_t>(cnt) - 1);
}

std::vector<int> complement_of(const std::vector<int>& whole, const std::vector<int>& part) {
  std::vector<int> rest;
  std::multiset<int> remove(part.begin(), part.end());
  for (int l : whole) {
    auto it = remove.find(l);
    if (it != remove.end())
      remove.erase(it);
    else
      rest.push_back(l);
  }
  return rest;
}

TwoFactorShape family_base_shape(const TwoFactorShape& shape) {
  std::vector<int> lengths = shape.lengths();
  lengths.back() = 11;
  return TwoFactorShape(lengths);
}

TriplePacking base_for(const TwoFactorShape& shape, bool with_k5, const Deadline& deadline) {
  const TwoFactorShape base_shape = family_base_shape(shape);
  if (auto frozen = family_base(base_shape, with_k5)) return *frozen;
  auto r = search_packing(base_shape,
                          with_k5 ? PackingConstraint::RequireK5 : PackingConstraint::ForbidK5,
                          deadline);
  if (!r.packing)
    throw Error(ErrorCode::Incomplete, "no " + std::string(with_k5 ? "K5" : "K5-free") +
                                           " base packing found for " + base_shape.to_string());
  return *r.packing;
}

// Index of the last cycle of the given length in a normalized placement.
int long_cycle_index(const CyclePlacement& placement, int length) {
  for (int i = static_cast<int>(placement.cycles.size()) - 1; i >= 0; --i)
    if (static_cast<int>(placement.cycles[i].size()) == length) return i;
  return -1;
}

std::vector<Edge> sorted_cycle_edges(const Cycle& c) {
  auto edges = cycle_edges(c);
  std::sort(edges.begin(), edges.end());
  return edges;
}

Pair make_pair(TriplePacking first, TriplePacking second, std::string method,
               const CanonLimits& limits) {
  auto cert = certify_distinct(union_graph(first), union_graph(second), limits);
  if (!cert)
    throw Error(ErrorCode::Incomplete,
                "constructed packings of " + first.shape.to_string() + " (" + method +
                    ") could not be certified distinct");
  return Pair{std::move(first), std::move(second), std::move(*cert), std::move(method)};
}

}  // namespace

std::optional<std::pair<TwoFactorShape, TwoFactorShape>> packable_split(
    const TwoFactorShape& shape) {
  const auto& lengths = shape.lengths();
  const std::size_t k = lengths.size();
  if (k < 2) return std::nullopt;
  if (k >= 3) {
    std::vector<int> two{lengths[k - 2], lengths[k - 1]};
    std::vector<int> rest(lengths.begin(), lengths.end() - 2);
    if (part_packable(two) && part_packable(rest))
      return std::pair{TwoFactorShape(two), TwoFactorShape(rest)};
  }
  std::map<int, int> counts;
  for (int l : lengths) ++counts[l];
  std::vector<std::pair<int, int>> flat(counts.begin(), counts.end());
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  sub_multisets(flat, 0, cur, parts);
  std::optional<std::vector<int>> best;
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
    if (part.size() == k) continue;
    if (!part_packable(part) || !part_packable(complement_of(lengths, part))) continue;
    if (!best || part < *best) best = part;
  }
  if (!best) return std::nullopt;
  return std::pair{TwoFactorShape(*best), TwoFactorShape(complement_of(lengths, *best))};
}

bool is_family_shape(const TwoFactorShape& shape) {
  const auto& l = shape.lengths();
  if (l.size() == 2) return l[0] >= 3 && l[0] <= 6 && l[1] >= 11;
  if (l.size() == 3) return l[0] == 3 && l[1] == 3 && l[2] >= 11;
  return false;
}

TriplePacking grow_family(const TriplePacking& base, int target_x, bool keep_k5_free) {
  const auto report = validate_packing(base);
  if (!report.ok()) throw Error(ErrorCode::InvalidPacking, report.violations.front().detail);
  int x = base.shape.longest();
  if (target_x < x)
    throw Error(ErrorCode::InvalidShape, "cannot shrink the long cycle from " + std::to_string(x) +
                                             " to " + std::to_string(target_x));
  std::vector<int> clique;  // 1-based labels of a K5 to preserve
  if (!keep_k5_free) {
    if (auto k5 = find_k5(union_graph(base)))
      for (int v : *k5) clique.push_back(v + 1);
  }
  auto in_clique = [&](const Edge& e) {
    return std::find(clique.begin(), clique.end(), e.u) != clique.end() &&
           std::find(clique.begin(), clique.end(), e.v) != clique.end();
  };

  TriplePacking p = normalized(base);
  for (; x < target_x; ++x) {
    TargetCycles targets{};
    for (int c = 0; c < 3; ++c) targets[c] = long_cycle_index(p.copies[c], x);
    const auto black = sorted_cycle_edges(p.copies[kBlack].cycles[targets[kBlack]]);
    const auto blue = sorted_cycle_edges(p.copies[kBlue].cycles[targets[kBlue]]);
    const auto red = sorted_cycle_edges(p.copies[kRed].cycles[targets[kRed]]);
    std::optional<std::array<Edge, 3>> pick;
    for (const Edge& e1 : black) {
      if (in_clique(e1)) continue;
      for (const Edge& e2 : blue) {
        if (in_clique(e2) || e2.shares_vertex(e1)) continue;
        for (const Edge& e3 : red) {
          if (in_clique(e3) || e3.shares_vertex(e1) || e3.shares_vertex(e2)) continue;
          pick = std::array<Edge, 3>{e1, e2, e3};
          break;
        }
        if (pick) break;
      }
      if (pick) break;
    }
    if (!pick)
      throw Error(ErrorCode::NoMatchingAvailable,
                  "no independent black/blue/red edges on the long cycles of " +
                      p.shape.to_string());
    p = subdivide_matching(p, targets, (*pick)[0], (*pick)[1], (*pick)[2]);
  }
  return p;
}

TriplePacking grow_family_or_search(const TriplePacking& base, int target_x, bool keep_k5_free,
                                    const Deadline& deadline) {
  try {
    return grow_family(base, target_x, keep_k5_free);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoMatchingAvailable) throw;
  }
  std::vector<int> lengths = base.shape.lengths();
  lengths.back() = target_x;
  const TwoFactorShape shape(lengths);
  auto r = search_packing(
      shape, keep_k5_free ? PackingConstraint::ForbidK5 : PackingConstraint::RequireK5, deadline);
  if (!r.packing)
    throw Error(ErrorCode::Incomplete, "no family packing found for " + shape.to_string());
  return *r.packing;
}

TriplePacking any_packing(const TwoFactorShape& shape, const Deadline& deadline) {
  if (shape.order() < 7 || shape == TwoFactorShape{3, 3})
    throw Error(ErrorCode::InvalidShape, shape.to_string() + " has no packing");
  if (auto entry = catalog_lookup(shape)) return entry->packings.front();
  if (shape.components() == 1)
    return hamiltonian_decomposition(CirculantSpec{shape.order(), {1, 2, 3}}, deadline);
  if (auto split = packable_split(shape))
    return disjoint_union(any_packing(split->first, deadline),
                          any_packing(split->second, deadline));
  if (is_family_shape(shape))
    return grow_family_or_search(base_for(shape, false, deadline), shape.longest(), true,
                                 deadline);
  auto r = search_packing(shape, PackingConstraint::Any, deadline);
  if (!r.packing) throw Error(ErrorCode::Incomplete, "no packing found for " + shape.to_string());
  return *r.packing;
}

OutcomeClass outcome_class(const PackingOutcome& o) {
  return static_cast<OutcomeClass>(o.index());
}

std::string_view to_string(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::NonExistent: return "nonexistent";
    case OutcomeClass::Unique: return "unique";
    case OutcomeClass::Pair: return "pair";
  }
  return "?";
}

OutcomeClass expected_class(const TwoFactorShape& shape) {
  if (shape.order() < 7 || shape == TwoFactorShape{3, 3}) return OutcomeClass::NonExistent;
  if (shape.order() <= 8 || shape == TwoFactorShape{3, 3, 3}) return OutcomeClass::Unique;
  return OutcomeClass::Pair;
}

PackingOutcome distinct_packings(const TwoFactorShape& shape, const ConstructOptions& options) {
  const int n = shape.order();
  const Deadline& deadline = options.deadline;

  if (n < 7)
    return NonExistent{"the union of three copies is 6-regular, which needs at least 7 vertices"};
  if (shape == TwoFactorShape{3, 3})
    return NonExistent{"three copies of 2C3 cannot be packed"};

  if (expected_class(shape) == OutcomeClass::Unique) {
    auto entry = catalog_lookup(shape);
    if (!entry) throw Error(ErrorCode::Incomplete, "catalog lacks " + shape.to_string());
    return Unique{entry->packings.front()};
  }

  if (shape.components() == 1) {
    const auto [a, b] = select_generator_pair(n);
    CanonLimits limits = options.limits;
    limits.chromatic_max_n = std::max(limits.chromatic_max_n, n);
    return make_pair(hamiltonian_decomposition(a, deadline), hamiltonian_decomposition(b, deadline),
                     "circulant", limits);
  }

  if (auto split = packable_split(shape)) {
    TriplePacking apart = disjoint_union(any_packing(split->first, deadline),
                                         any_packing(split->second, deadline));
    TriplePacking joined = merge_components(apart);
    return make_pair(std::move(apart), std::move(joined), "split-merge", options.limits);
  }

  if (is_family_shape(shape)) {
    const int x = shape.longest();
    TriplePacking with = grow_family_or_search(base_for(shape, true, deadline), x, false, deadline);
    TriplePacking without =
        grow_family_or_search(base_for(shape, false, deadline), x, true, deadline);
    return make_pair(std::move(with), std::move(without), "k5-family", options.limits);
  }

  if (auto entry = catalog_lookup(shape); entry && entry->packings.size() >= 2)
    return make_pair(entry->packings[0], entry->packings[1], "catalog", options.limits);

  // Shapes outside every construction above: find one packing, then one whose
  // union is not isomorphic to it.
  auto first = search_packing(shape, PackingConstraint::Any, deadline);
  if (!first.packing)
    throw Error(ErrorCode::Incomplete, "no packing found for " + shape.to_string());
  const CanonicalForm form = canonical_form(union_graph(*first.packing), options.limits);
  auto second = search_packing_where(
      shape, [&](const SimpleGraph& g) { return canonical_form(g, options.limits) != form; },
      deadline);
  if (!second.packing)
    throw Error(ErrorCode::Incomplete, "no second packing found for " + shape.to_string());
  return make_pair(std::move(*first.packing), std::move(*second.packing), "search",
                   options.limits);
}

}  // namespace tripack
