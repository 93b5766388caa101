#include "tripack/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "factor_finder.hpp"
#include "tripack/canon.hpp"
#include "tripack/error.hpp"

namespace tripack {

namespace {

using Cycles = std::vector<std::vector<int>>;

std::vector<Edge> edges_of(const Cycles& cycles) {
  std::vector<Edge> out;
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) out.emplace_back(c[i], c[(i + 1) % c.size()]);
  return out;
}

TriplePacking labelled(const TwoFactorShape& shape, const std::array<Cycles, 3>& copies) {
  TriplePacking p;
  p.n = shape.order();
  p.shape = shape;
  for (int c = 0; c < 3; ++c)
    for (const auto& cyc : copies[c]) {
      Cycle out;
      for (int v : cyc) out.push_back(v + 1);
      p.copies[c].cycles.push_back(std::move(out));
    }
  return normalized(std::move(p));
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : k) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

// Labelled union as a bitmask over vertex pairs.
std::vector<std::uint64_t> union_key(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> key((static_cast<std::size_t>(n) * n + 63) / 64, 0);
  for (const Edge& e : g.edges()) {
    const std::size_t bit = static_cast<std::size_t>(e.u) * n + e.v;
    key[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
  return key;
}

struct ClassHit {
  std::size_t branch;
  std::uint64_t order;  // position of the packing within its branch
  TriplePacking packing;
};

struct Worker {
  std::map<CanonicalForm, ClassHit> classes;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> seen;
  std::uint64_t packings = 0;
  bool stopped = false;
};

}  // namespace

int worker_threads() {
  if (const char* env = std::getenv("TRIPACK_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

EnumerationResult enumerate_unions(const TwoFactorShape& shape, int max_n,
                                   const Deadline& deadline) {
  const int n = shape.order();
  if (n > max_n)
    throw Error(ErrorCode::OrderTooLarge, "enumeration of " + shape.to_string() + " needs n <= " +
                                              std::to_string(max_n));
  EnumerationResult result;
  result.shape = shape;
  result.exhaustive = true;

  Cycles black;
  for (int next = 0; int len : shape.lengths()) {
    std::vector<int> c(static_cast<std::size_t>(len));
    std::iota(c.begin(), c.end(), next);
    next += len;
    black.push_back(std::move(c));
  }
  SimpleGraph avail2(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) avail2.add_edge(i, j);
  for (const Edge& e : edges_of(black)) avail2.remove_edge(e.u, e.v);

  std::vector<Cycles> seconds;
  {
    detail::TwoFactorFinder finder(avail2, shape);
    detail::SearchBudget budget;
    budget.deadline = &deadline;
    finder.run(
        [&](const Cycles& c2) {
          seconds.push_back(c2);
          return false;
        },
        budget);
    if (budget.stopped()) result.exhaustive = false;
  }

  const int threads = std::max(1, std::min<int>(worker_threads(), static_cast<int>(seconds.size())));
  std::vector<Worker> workers(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> next_branch{0};

  auto work = [&](Worker& w) {
    for (;;) {
      const std::size_t b = next_branch.fetch_add(1);
      if (b >= seconds.size()) return;
      const Cycles& c2 = seconds[b];
      SimpleGraph avail3 = avail2;
      for (const Edge& e : edges_of(c2)) avail3.remove_edge(e.u, e.v);
      detail::TwoFactorFinder finder(avail3, shape);
      detail::SearchBudget budget;
      budget.deadline = &deadline;
      std::uint64_t order = 0;
      finder.run(
          [&](const Cycles& c3) {
            ++w.packings;
            const std::uint64_t here = order++;
            SimpleGraph u(n);
            for (const Cycles* copy : std::array<const Cycles*, 3>{&black, &c2, &c3})
              for (const Edge& e : edges_of(*copy)) u.add_edge(e.u, e.v);
            if (!w.seen.insert(union_key(u)).second) return false;
            CanonicalForm form = canonical_form(u);
            auto it = w.classes.find(form);
            if (it == w.classes.end() || std::pair(b, here) < std::pair(it->second.branch, it->second.order))
              w.classes.insert_or_assign(std::move(form),
                                         ClassHit{b, here, labelled(shape, {black, c2, c3})});
            return false;
          },
          budget);
      if (budget.stopped()) {
        w.stopped = true;
        return;
      }
    }
  };

  if (threads == 1) {
    work(workers[0]);
  } else {
    std::vector<std::thread> pool;
    for (auto& w : workers) pool.emplace_back(work, std::ref(w));
    for (auto& t : pool) t.join();
  }

  std::map<CanonicalForm, ClassHit> merged;
  for (auto& w : workers) {
    result.packings_seen += w.packings;
    if (w.stopped) result.exhaustive = false;
    for (auto& [form, hit] : w.classes) {
      auto it = merged.find(form);
      if (it == merged.end() ||
          std::pair(hit.branch, hit.order) < std::pair(it->second.branch, it->second.order))
        merged.insert_or_assign(form, std::move(hit));
    }
  }
  std::vector<ClassHit> hits;
  for (auto& [form, hit] : merged) hits.push_back(std::move(hit));
  std::sort(hits.begin(), hits.end(), [](const ClassHit& a, const ClassHit& b) {
    return std::pair(a.branch, a.order) < std::pair(b.branch, b.order);
  });
  for (auto& h : hits) result.representatives.push_back(std::move(h.packing));
  result.count_union_classes = static_cast<int>(result.representatives.size());
  return result;
}

bool brute_force_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const int n = a.order();
  if (n > 9 || b.order() > 9)
    throw Error(ErrorCode::OrderTooLarge, "brute-force isomorphism is limited to 9 vertices");
  if (n != b.order() || a.size() != b.size()) return false;
  const auto edges = a.edges();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : edges)
      if (!b.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace tripack
