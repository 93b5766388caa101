#include "factor_finder.hpp"

#include <algorithm>
#include <numeric>

namespace tripack::detail {

TwoFactorFinder::TwoFactorFinder(const SimpleGraph& available, const TwoFactorShape& shape)
    : g_(available), n_(available.order()), remaining_lengths_(shape.lengths()),
      forced_(static_cast<std::size_t>(available.order())), rank_(static_cast<std::size_t>(available.order())),
      free_(available.order()) {
  std::iota(rank_.begin(), rank_.end(), 0);
}

void TwoFactorFinder::set_forced(const std::vector<Edge>& edges) {
  for (auto& f : forced_) f.clear();
  for (const Edge& e : edges) {
    forced_[e.u].push_back(e.v);
    forced_[e.v].push_back(e.u);
  }
}

void TwoFactorFinder::set_rank(std::vector<int> rank) { rank_ = std::move(rank); }

bool TwoFactorFinder::run(const Visitor& visit, SearchBudget& budget) {
  int total = std::accumulate(remaining_lengths_.begin(), remaining_lengths_.end(), 0);
  if (total != n_) return false;
  for (const auto& f : forced_) {
    if (f.size() > 2) return false;
  }
  for (int v = 0; v < n_; ++v) {
    for (int w : forced_[v])
      if (!g_.adjacent(v, w)) return false;
    free_.set(v);
  }
  cycles_.clear();
  path_.clear();
  visit_ = &visit;
  budget_ = &budget;
  return start_cycle();
}

bool TwoFactorFinder::start_cycle() {
  if (remaining_lengths_.empty()) return (*visit_)(cycles_);
  const int v = free_.first();
  for (std::size_t i = 0; i < remaining_lengths_.size(); ++i) {
    if (i > 0 && remaining_lengths_[i] == remaining_lengths_[i - 1]) continue;
    const int length = remaining_lengths_[i];
    remaining_lengths_.erase(remaining_lengths_.begin() + static_cast<std::ptrdiff_t>(i));
    current_length_ = length;
    path_.assign(1, v);
    bool stop = extend(v, length - 1);
    remaining_lengths_.insert(remaining_lengths_.begin() + static_cast<std::ptrdiff_t>(i), length);
    if (stop || budget_->stopped()) return stop;
  }
  return false;
}

bool TwoFactorFinder::degrees_ok(int x) const {
  bool ok = true;
  (g_.neighbors(x) & free_).for_each([&](int u) {
    if (!ok || u == path_.front() || u == path_.back()) return;
    if ((g_.neighbors(u) & free_).count() < 2) ok = false;
  });
  return ok;
}

bool TwoFactorFinder::forced_ok_at_close(int start, int second, int last) const {
  for (int f : forced_[start])
    if (f != second && f != last) return false;
  const int prev = path_[path_.size() - 2];
  for (int f : forced_[last])
    if (f != prev && f != start) return false;
  return true;
}

bool TwoFactorFinder::extend(int last, int remaining) {
  if (!budget_->tick()) return false;
  const int start = path_.front();

  if (remaining == 0) {
    if (!g_.adjacent(last, start) || path_[1] > last) return false;
    if (!forced_ok_at_close(start, path_[1], last)) return false;
    free_.reset(start);
    free_.reset(last);
    bool ok = true;
    for (int x : {start, last}) ok = ok && degrees_ok(x);
    bool stop = false;
    if (ok) {
      cycles_.push_back(path_);
      stop = start_cycle();
      path_ = std::move(cycles_.back());  // the nested call reused path_
      cycles_.pop_back();
    }
    free_.set(start);
    free_.set(last);
    return stop;
  }

  int required = -1;
  if (last == start) {
    if (forced_[start].size() == 2) {
      // Both forced edges are the cycle edges at start; the smaller one is
      // the second vertex by the direction convention.
      required = std::min(forced_[start][0], forced_[start][1]);
    }
  } else {
    const int prev = path_[path_.size() - 2];
    int pending = 0;
    for (int f : forced_[last]) {
      if (f == prev) continue;
      ++pending;
      required = f;
    }
    if (pending > 1 || required == start) return false;
  }

  std::vector<int> candidates;
  if (required >= 0) {
    if (g_.adjacent(last, required) && free_.test(required) && required != start)
      candidates.push_back(required);
  } else {
    (g_.neighbors(last) & free_).for_each([&](int y) {
      if (y != start && y != last) candidates.push_back(y);
    });
    std::sort(candidates.begin(), candidates.end(),
              [&](int a, int b) { return rank_[a] < rank_[b]; });
  }

  for (int y : candidates) {
    if (remaining == 1 && path_.size() >= 2 && y < path_[1]) continue;
    if (forced_[y].size() == 2 && forced_[y][0] != last && forced_[y][1] != last) continue;
    if (remaining == 1 && !g_.adjacent(y, start)) continue;
    path_.push_back(y);
    const bool interior = last != start;
    if (interior) free_.reset(last);
    bool stop = false;
    if (!interior || degrees_ok(last)) stop = extend(y, remaining - 1);
    if (interior) free_.set(last);
    path_.pop_back();
    if (stop || budget_->stopped()) return stop;
  }
  return false;
}

}  // namespace tripack::detail
