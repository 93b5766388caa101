#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace tripack {

/// Dynamic bitset over vertex indices 0..capacity-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  int capacity() const { return capacity_; }

  void set(int v) { words_[v >> 6] |= bit(v); }
  void reset(int v) { words_[v >> 6] &= ~bit(v); }
  bool test(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

  int count() const;
  bool empty() const;
  /// Smallest member, or -1.
  int first() const { return next(-1); }
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tripack
