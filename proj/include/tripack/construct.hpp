#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tripack/canon.hpp"
#include "tripack/deadline.hpp"
#include "tripack/graph.hpp"
#include "tripack/packing.hpp"

namespace tripack {

// ---------------------------------------------------------------- catalog

struct CatalogEntry {
  TwoFactorShape shape;
  std::vector<TriplePacking> packings;  // one (unique shapes) or two
  std::string source;                   // "table" or "search"
};

/// Embedded packings: two distinct ones for each of the 46 small shapes of
/// the published table, one for each shape whose packing is unique
/// ([7], [8], [3,4], [4,4], [3,5], [3,3,3]). nullopt for any other shape.
std::optional<CatalogEntry> catalog_lookup(const TwoFactorShape& shape);

const std::vector<CatalogEntry>& catalog_entries();

/// SHA-256 of resources/catalog.json as embedded at build time.
std::string_view catalog_checksum();

/// Raw embedded catalog text.
std::string_view catalog_text();

/// Frozen base packings of the families [s,11] (s = 3..6) and [3,3,11], one
/// whose union contains a K5 and one that is K5-free.
std::optional<TriplePacking> family_base(const TwoFactorShape& shape, bool with_k5);

// ------------------------------------------------------------- operations

/// Joins the components of the union one pair at a time by swapping the
/// positions of two vertices on their blue cycles. Black and red copies are
/// untouched and the blue cycle lengths are preserved. Returns p unchanged
/// when the union is already connected. Throws Error(InvalidPacking) or
/// Error(MergeFailed).
TriplePacking merge_components(const TriplePacking& p);

/// One swap step of merge_components: joins the first two components of the
/// union (ordered by smallest label). Unchanged when already connected.
TriplePacking merge_step(const TriplePacking& p);

/// Per-copy index of the target cycle in p.copies[c].cycles.
using TargetCycles = std::array<int, 3>;

/// Inserts a new vertex n+1 into the target cycle of every copy by
/// subdividing the black edge e1, the blue edge e2 and the red edge e3.
/// The three target cycles must have equal length q; the result packs three
/// copies of the shape with one q replaced by q+1. Throws
/// Error(InvalidPacking), Error(EdgesNotIndependent),
/// Error(EdgeNotOnTargetCycle) or Error(WrongColor). Edge labels are 1-based.
TriplePacking subdivide_matching(const TriplePacking& p, const TargetCycles& targets,
                                 const Edge& e1, const Edge& e2, const Edge& e3);

enum class PackingConstraint { Any, RequireK5, ForbidK5, RequireDisconnected };

std::string_view to_string(PackingConstraint c);

enum class SearchStatus { Found, Exhausted, Timeout };

std::string_view to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<TriplePacking> packing;
  std::uint64_t nodes = 0;
};

/// Backtracking search for a packing; the black copy is fixed to the
/// identity placement (1..n1), (n1+1..), ... Deterministic for a given
/// shape and constraint. Exhausted means no packing satisfying the
/// constraint exists (for RequireDisconnected: no packable split exists).
SearchResult search_packing(const TwoFactorShape& shape, PackingConstraint constraint,
                            const Deadline& deadline = {});

/// Search for a packing whose union satisfies `accept`.
SearchResult search_packing_where(const TwoFactorShape& shape,
                                  const std::function<bool(const SimpleGraph&)>& accept,
                                  const Deadline& deadline = {});

/// Grows the longest cycle of a family packing from 11 to target_x by
/// repeated subdivision, scanning black/blue/red edge triples of the long
/// cycles in sorted order. With keep_k5_free every step stays K5-free; when
/// the base contains a K5 the matchings avoid its edges so it persists.
/// Throws Error(NoMatchingAvailable) when no independent triple exists.
TriplePacking grow_family(const TriplePacking& base, int target_x, bool keep_k5_free);

/// Like grow_family, but on Error(NoMatchingAvailable) searches the full
/// shape directly with the matching K5 constraint.
TriplePacking grow_family_or_search(const TriplePacking& base, int target_x, bool keep_k5_free,
                                    const Deadline& deadline = {});

/// Some packing of the shape (order >= 7, not [3,3]), built from the
/// catalog, circulants, splits, families or search. Throws
/// Error(Incomplete) when nothing is found within the deadline.
TriplePacking any_packing(const TwoFactorShape& shape, const Deadline& deadline = {});

/// A packable split of a multi-cycle shape into two parts, each of order at
/// least 7: the two longest cycles if that works, otherwise the
/// lexicographically smallest packable part.
std::optional<std::pair<TwoFactorShape, TwoFactorShape>> packable_split(const TwoFactorShape& shape);

/// [s,x] with 3 <= s <= 6, or [3,3,x], where x >= 11.
bool is_family_shape(const TwoFactorShape& shape);

// ------------------------------------------------------ classification

struct NonExistent {
  std::string reason;
};

struct Unique {
  TriplePacking packing;
};

struct Pair {
  TriplePacking first;
  TriplePacking second;
  DistinctnessCertificate certificate;
  std::string method;  // circulant, split-merge, k5-family, catalog, search
};

using PackingOutcome = std::variant<NonExistent, Unique, Pair>;

enum class OutcomeClass { NonExistent, Unique, Pair };

OutcomeClass outcome_class(const PackingOutcome& o);
std::string_view to_string(OutcomeClass c);

/// The class the classification prescribes: no packing for [3], [4], [5],
/// [6], [3,3]; a unique one for [7], [8], [3,4], [4,4], [3,5], [3,3,3];
/// at least two otherwise.
OutcomeClass expected_class(const TwoFactorShape& shape);

struct ConstructOptions {
  Deadline deadline;
  CanonLimits limits;
};

/// Decides the shape and returns witnesses: NonExistent, Unique with its
/// packing, or Pair with two packings and a certificate that their unions
/// are non-isomorphic. Throws Error(Incomplete) when a constructive step
/// fails within the deadline.
PackingOutcome distinct_packings(const TwoFactorShape& shape, const ConstructOptions& options = {});

}  // namespace tripack
