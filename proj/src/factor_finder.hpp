#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tripack/deadline.hpp"
#include "tripack/graph.hpp"
#include "tripack/packing.hpp"

namespace tripack::detail {

/// Shared node counter and stopping rules for one search attempt.
struct SearchBudget {
  const Deadline* deadline = nullptr;
  std::uint64_t node_limit = 0;  // 0 = unlimited
  std::uint64_t nodes = 0;
  bool timed_out = false;
  bool limit_hit = false;

  // Returns false once the search must stop.
  bool tick() {
    ++nodes;
    if (node_limit != 0 && nodes > node_limit) {
      limit_hit = true;
      return false;
    }
    if ((nodes & 0x3FF) == 0 && deadline != nullptr && deadline->expired()) {
      timed_out = true;
      return false;
    }
    return !timed_out && !limit_hit;
  }
  bool stopped() const { return timed_out || limit_hit; }
};

/// Enumerates every labelled 2-factor of a given shape inside `available`
/// (0-based vertices), each exactly once. A cycle always starts at the
/// smallest vertex not yet covered and is traversed so that its second vertex
/// is smaller than its last. Optional forced edges must all be used.
class TwoFactorFinder {
 public:
  using Visitor = std::function<bool(const std::vector<std::vector<int>>&)>;

  TwoFactorFinder(const SimpleGraph& available, const TwoFactorShape& shape);

  void set_forced(const std::vector<Edge>& edges);
  /// Candidate successors are tried by increasing rank[v] (default: label).
  void set_rank(std::vector<int> rank);

  /// Calls visit on each factor until it returns true. Returns true when the
  /// visitor stopped the search, false when the tree was exhausted or the
  /// budget ran out (see budget.stopped()).
  bool run(const Visitor& visit, SearchBudget& budget);

 private:
  bool start_cycle();
  bool extend(int last, int remaining);
  bool degrees_ok(int x) const;
  bool forced_ok_at_close(int start, int second, int last) const;

  const SimpleGraph& g_;
  int n_;
  std::vector<int> remaining_lengths_;  // multiset, sorted
  std::vector<std::vector<int>> forced_;
  std::vector<int> rank_;
  VertexSet free_;  // vertices not on a finished cycle or the current path interior
  std::vector<std::vector<int>> cycles_;
  std::vector<int> path_;
  int current_length_ = 0;
  const Visitor* visit_ = nullptr;
  SearchBudget* budget_ = nullptr;
};

}  // namespace tripack::detail
