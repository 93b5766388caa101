#include <algorithm>
#include <numeric>
#include <random>

#include "factor_finder.hpp"
#include "tripack/construct.hpp"
#include "tripack/error.hpp"

namespace tripack {

std::string_view to_string(PackingConstraint c) {
  switch (c) {
    case PackingConstraint::Any: return "any";
    case PackingConstraint::RequireK5: return "require-k5";
    case PackingConstraint::ForbidK5: return "forbid-k5";
    case PackingConstraint::RequireDisconnected: return "require-disconnected";
  }
  return "?";
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Timeout: return "timeout";
  }
  return "?";
}

namespace {

using Cycles = std::vector<std::vector<int>>;
using Accept = std::function<bool(const SimpleGraph&)>;

struct Problem {
  TwoFactorShape shape;
  Accept accept;                          // may be empty
  std::vector<int> clique;                // required K5 (0-based), may be empty
  int copy3_cap = 0;                      // third-copy tries per second copy, 0 = all
  std::uint64_t total_node_cap = 0;       // give up (as Timeout) past this, 0 = never
};

enum class AttemptResult { Found, Exhausted, Stopped };

std::vector<Edge> cycles_edges(const Cycles& cycles) {
  std::vector<Edge> out;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
  return out;
}

TriplePacking to_packing(const TwoFactorShape& shape, const std::array<Cycles, 3>& copies) {
  TriplePacking p;
  p.n = shape.order();
  p.shape = shape;
  for (int c = 0; c < 3; ++c)
    for (const auto& cyc : copies[c]) {
      Cycle labelled;
      for (int v : cyc) labelled.push_back(v + 1);
      p.copies[c].cycles.push_back(std::move(labelled));
    }
  return normalized(std::move(p));
}

class Attempt {
 public:
  Attempt(const Problem& problem, std::vector<int> rank, detail::SearchBudget& budget)
      : pr_(problem), n_(problem.shape.order()), rank_(std::move(rank)), budget_(budget) {}

  AttemptResult run() {
    int next = 0;
    for (int len : pr_.shape.lengths()) {
      std::vector<int> c(static_cast<std::size_t>(len));
      std::iota(c.begin(), c.end(), next);
      next += len;
      copies_[0].push_back(std::move(c));
    }
    SimpleGraph avail2(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) avail2.add_edge(i, j);
    for (const Edge& e : cycles_edges(copies_[0])) avail2.remove_edge(e.u, e.v);

    if (!pr_.clique.empty()) {
      for (std::size_t i = 0; i < pr_.clique.size(); ++i)
        for (std::size_t j = i + 1; j < pr_.clique.size(); ++j)
          if (avail2.adjacent(pr_.clique[i], pr_.clique[j]))
            required_.emplace_back(pr_.clique[i], pr_.clique[j]);
    }

    detail::TwoFactorFinder second(avail2, pr_.shape);
    second.set_rank(rank_);
    const bool found = second.run(
        [&](const Cycles& c2) { return try_second(avail2, c2); }, budget_);
    if (found) return AttemptResult::Found;
    if (budget_.stopped() || capped_) return AttemptResult::Stopped;
    return AttemptResult::Exhausted;
  }

  const std::optional<TriplePacking>& packing() const { return packing_; }

 private:
  bool try_second(const SimpleGraph& avail2, const Cycles& c2) {
    const auto e2 = cycles_edges(c2);
    std::vector<Edge> leftover;
    if (!required_.empty()) {
      std::vector<int> load(static_cast<std::size_t>(n_), 0);
      for (const Edge& r : required_) {
        if (std::find(e2.begin(), e2.end(), r) != e2.end()) continue;
        leftover.push_back(r);
        if (++load[r.u] > 2 || ++load[r.v] > 2) return false;
      }
    }
    SimpleGraph avail3 = avail2;
    for (const Edge& e : e2) avail3.remove_edge(e.u, e.v);
    for (const Edge& r : leftover)
      if (!avail3.adjacent(r.u, r.v)) return false;

    detail::TwoFactorFinder third(avail3, pr_.shape);
    third.set_rank(rank_);
    third.set_forced(leftover);
    int tries = 0;
    bool hit_cap = false;
    const bool found = third.run(
        [&](const Cycles& c3) {
          copies_[1] = c2;
          copies_[2] = c3;
          if (accepted()) return true;
          if (pr_.copy3_cap > 0 && ++tries >= pr_.copy3_cap) {
            hit_cap = true;
            return true;
          }
          return false;
        },
        budget_);
    if (hit_cap) capped_ = true;
    return found && !hit_cap;
  }

  bool accepted() {
    if (pr_.accept) {
      SimpleGraph u(n_);
      for (const auto& copy : copies_)
        for (const Edge& e : cycles_edges(copy)) u.add_edge(e.u, e.v);
      if (!pr_.accept(u)) return false;
    }
    packing_ = to_packing(pr_.shape, copies_);
    return true;
  }

  const Problem& pr_;
  int n_;
  std::vector<int> rank_;
  detail::SearchBudget& budget_;
  std::array<Cycles, 3> copies_;
  std::vector<Edge> required_;
  bool capped_ = false;
  std::optional<TriplePacking> packing_;
};

constexpr std::uint64_t kFirstNodeLimit = 20000;
constexpr int kCappedAttempts = 6;
constexpr std::uint64_t kCliqueCandidateNodes = 4000000;

// Restarts with growing node limits; attempt 0 uses label order, later ones
// a seeded shuffle so results are reproducible.
SearchResult solve(const Problem& base, const Deadline& deadline) {
  SearchResult result;
  const int n = base.shape.order();
  std::uint64_t limit = kFirstNodeLimit;
  for (int attempt = 0;; ++attempt) {
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    if (attempt > 0) {
      std::mt19937 rng(static_cast<std::uint32_t>(attempt));
      std::shuffle(rank.begin(), rank.end(), rng);
    }
    Problem problem = base;
    if (attempt >= kCappedAttempts) problem.copy3_cap = 0;
    detail::SearchBudget budget;
    budget.deadline = &deadline;
    budget.node_limit = limit;
    Attempt run(problem, std::move(rank), budget);
    const AttemptResult r = run.run();
    result.nodes += budget.nodes;
    if (r == AttemptResult::Found) {
      result.status = SearchStatus::Found;
      result.packing = run.packing();
      return result;
    }
    if (r == AttemptResult::Exhausted) {
      result.status = SearchStatus::Exhausted;
      return result;
    }
    if (budget.timed_out || deadline.expired() ||
        (base.total_node_cap != 0 && result.nodes >= base.total_node_cap)) {
      result.status = SearchStatus::Timeout;
      return result;
    }
    if (limit < (std::uint64_t{1} << 40)) limit *= 2;
  }
}

// Candidate 5-sets for a required K5 on the identity black placement: five
// consecutive vertices of the longest cycle, then windows that take fewer
// vertices from it and the first vertices of the other cycles.
std::vector<std::vector<int>> clique_candidates(const TwoFactorShape& shape) {
  std::vector<std::vector<int>> starts;  // 0-based members of each black cycle
  std::vector<int> lengths = shape.lengths();
  int next = 0;
  for (int len : lengths) {
    std::vector<int> c(static_cast<std::size_t>(len));
    std::iota(c.begin(), c.end(), next);
    next += len;
    starts.push_back(std::move(c));
  }
  std::vector<std::vector<int>> out;
  const auto& longest = starts.back();
  for (int take = std::min<int>(5, static_cast<int>(longest.size())); take >= 1; --take) {
    std::vector<int> set(longest.begin(), longest.begin() + take);
    for (std::size_t c = 0; c + 1 < starts.size() && set.size() < 5; ++c)
      for (int v : starts[c]) {
        if (set.size() == 5) break;
        set.push_back(v);
      }
    if (set.size() == 5) {
      std::sort(set.begin(), set.end());
      if (std::find(out.begin(), out.end(), set) == out.end()) out.push_back(set);
    }
  }
  return out;
}

SearchResult disconnected(const TwoFactorShape& shape, const Deadline& deadline) {
  SearchResult result;
  auto split = packable_split(shape);
  if (!split) return result;
  try {
    result.packing = disjoint_union(any_packing(split->first, deadline),
                                    any_packing(split->second, deadline));
    result.status = SearchStatus::Found;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Incomplete && e.code() != ErrorCode::Timeout) throw;
    result.status = SearchStatus::Timeout;
  }
  return result;
}

}  // namespace

SearchResult search_packing(const TwoFactorShape& shape, PackingConstraint constraint,
                            const Deadline& deadline) {
  Problem problem{shape, {}, {}, 0, 0};
  switch (constraint) {
    case PackingConstraint::Any:
      return solve(problem, deadline);
    case PackingConstraint::ForbidK5:
      problem.accept = [](const SimpleGraph& g) { return !find_k5(g).has_value(); };
      problem.copy3_cap = 64;
      return solve(problem, deadline);
    case PackingConstraint::RequireK5: {
      problem.accept = [](const SimpleGraph& g) { return find_k5(g).has_value(); };
      SearchResult total;
      if (shape.order() < 7) return solve(problem, deadline);
      problem.total_node_cap = kCliqueCandidateNodes;
      for (const auto& clique : clique_candidates(shape)) {
        problem.clique = clique;
        auto r = solve(problem, deadline);
        total.nodes += r.nodes;
        if (r.status == SearchStatus::Found) {
          r.nodes = total.nodes;
          return r;
        }
        if (deadline.expired()) {
          total.status = SearchStatus::Timeout;
          return total;
        }
      }
      // No candidate 5-set worked; let the clique fall anywhere.
      problem.clique.clear();
      problem.copy3_cap = 64;
      problem.total_node_cap = 0;
      auto r = solve(problem, deadline);
      r.nodes += total.nodes;
      return r;
    }
    case PackingConstraint::RequireDisconnected:
      return disconnected(shape, deadline);
  }
  return {};
}

SearchResult search_packing_where(const TwoFactorShape& shape, const Accept& accept,
                                  const Deadline& deadline) {
  return solve(Problem{shape, accept, {}, 64, 0}, deadline);
}

}  // namespace tripack
