#pragma once

#include <cstdint>
#include <vector>

#include "tripack/deadline.hpp"
#include "tripack/graph.hpp"
#include "tripack/packing.hpp"

namespace tripack {

struct EnumerationResult {
  TwoFactorShape shape;
  int count_union_classes = 0;
  std::vector<TriplePacking> representatives;  // one per isomorphism class of unions
  bool exhaustive = false;                     // false when the deadline cut the search short
  std::uint64_t packings_seen = 0;             // labelled packings with the fixed black copy
};

inline constexpr int kDefaultEnumerationMaxN = 10;

/// Fixes the black copy to the identity placement, enumerates every red and
/// blue copy and groups the unions by canonical form. Second-copy branches
/// run on TRIPACK_THREADS worker threads (default: hardware concurrency);
/// representatives are the first packing of each class in branch order, so
/// the output does not depend on the thread count. Throws
/// Error(OrderTooLarge) when the order exceeds max_n.
EnumerationResult enumerate_unions(const TwoFactorShape& shape,
                                   int max_n = kDefaultEnumerationMaxN,
                                   const Deadline& deadline = {});

/// Tries all n! bijections. Throws Error(OrderTooLarge) for n > 9.
bool brute_force_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// Worker count from TRIPACK_THREADS, else hardware concurrency (at least 1).
int worker_threads();

}  // namespace tripack
