#pragma once

#include <chrono>
#include <optional>

namespace tripack {

/// Wall-clock budget shared by the search routines. Default-constructed
/// deadlines never expire.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  static Deadline seconds(double s) { return after(std::chrono::duration<double>(s)); }

  bool limited() const { return at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace tripack
