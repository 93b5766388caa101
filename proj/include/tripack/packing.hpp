#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

/// Cycle-length multiset of a 2-factor C_{n1} u ... u C_{nk}, kept sorted.
class TwoFactorShape {
 public:
  TwoFactorShape() = default;
  /// Sorts the lengths; throws Error(InvalidShape) if empty or any length < 3.
  explicit TwoFactorShape(std::vector<int> lengths);
  TwoFactorShape(std::initializer_list<int> lengths)
      : TwoFactorShape(std::vector<int>(lengths)) {}

  /// Parses "3,3,5" (whitespace tolerated).
  static TwoFactorShape parse(std::string_view text);

  const std::vector<int>& lengths() const { return lengths_; }
  int order() const { return order_; }
  int components() const { return static_cast<int>(lengths_.size()); }
  int longest() const { return lengths_.empty() ? 0 : lengths_.back(); }
  int count(int length) const;

  std::string to_string() const;

  bool operator==(const TwoFactorShape&) const = default;
  auto operator<=>(const TwoFactorShape&) const = default;

 private:
  std::vector<int> lengths_;
  int order_ = 0;
};

/// Multiset union of two shapes.
TwoFactorShape operator+(const TwoFactorShape& a, const TwoFactorShape& b);

/// All shapes of the given order (parts >= 3), in lexicographic order of
/// their sorted length lists.
std::vector<TwoFactorShape> shapes_of_order(int n);

using Cycle = std::vector<int>;

/// One copy of the 2-factor: cycles as cyclic vertex sequences over labels 1..n.
struct CyclePlacement {
  std::vector<Cycle> cycles;

  std::vector<int> lengths() const;  // sorted
  bool operator==(const CyclePlacement&) const = default;
};

inline constexpr int kBlack = 0;
inline constexpr int kRed = 1;
inline constexpr int kBlue = 2;

std::string_view color_name(int copy);

/// Three copies of one 2-factor on the common label set 1..n, ordered black,
/// red, blue. Construction does not validate; see validate_packing().
struct TriplePacking {
  int n = 0;
  TwoFactorShape shape;
  std::array<CyclePlacement, 3> copies;

  bool operator==(const TriplePacking&) const = default;
};

enum class ViolationKind { ShapeMismatch, VertexCoverage, EdgeOverlap, DegenerateCycle };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> copies;  // 1-based copy numbers involved
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Reports every violated packing invariant, not just the first.
ValidationReport validate_packing(const TriplePacking& p);

/// Edge sum of the three copies; vertex l-1 stands for label l.
/// Throws Error(InvalidPacking) when validate_packing fails.
SimpleGraph union_graph(const TriplePacking& p);

/// Edges of one copy as label pairs (1-based), sorted.
std::vector<Edge> copy_edges(const TriplePacking& p, int copy);
std::vector<Edge> cycle_edges(const Cycle& c);

/// Rotates so the smallest label is first and its smaller neighbour second.
Cycle normalize_cycle(Cycle c);
/// Normalizes every cycle and orders each copy's cycles by (length, first label).
CyclePlacement normalize_placement(CyclePlacement p);
TriplePacking normalized(TriplePacking p);

/// The cycles (1..n1), (n1+1..n1+n2), ... used as the fixed first copy in searches.
CyclePlacement identity_placement(const TwoFactorShape& shape);

/// Packing of shape(a)+shape(b) on a.n+b.n labels with b shifted by a.n.
TriplePacking disjoint_union(const TriplePacking& a, const TriplePacking& b);

/// Rebuilds cycles from a 2-regular set of label pairs on labels 1..n.
/// Throws Error(Parse) for labels outside 1..n and Error(InvalidPacking) if
/// the edges do not form vertex-disjoint cycles covering 1..n.
CyclePlacement placement_from_edges(int n, const std::vector<Edge>& edges);

}  // namespace tripack
