#include "tripack/vertex_set.hpp"

namespace tripack {

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= capacity_) return -1;
  std::size_t w = static_cast<std::size_t>(start >> 6);
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return static_cast<int>(w * 64 + std::countr_zero(bits));
    if (++w == words_.size()) return -1;
    bits = words_[w];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

}  // namespace tripack
