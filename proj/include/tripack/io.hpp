#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tripack/packing.hpp"

namespace tripack {

using Json = nlohmann::ordered_json;

/// {"n": 9, "shape": [3,6], "copies": [[[1,2,3],[4,...]], [...], [...]]}
Json to_json(const TriplePacking& p);
/// Throws Error(Parse) on structural problems; does not validate the packing.
TriplePacking packing_from_json(const Json& j);

/// One "u v c" line per edge, c in {1,2,3} for black/red/blue, sorted by
/// colour then edge.
std::string to_edge_list(const TriplePacking& p);
/// Inverse of to_edge_list; the shape is taken from the black copy. Throws
/// Error(Parse) on malformed lines and Error(InvalidPacking) when a colour
/// class is not a 2-factor.
TriplePacking packing_from_edge_list(std::string_view text);

/// Graphviz rendering with edge colours black/red/blue.
std::string to_dot(const TriplePacking& p, std::string_view name = "packing");

/// Accepts either the JSON or the edge-list format.
TriplePacking read_packing(std::string_view text);

Json validation_to_json(const ValidationReport& r);

}  // namespace tripack
