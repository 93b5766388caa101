#pragma once

#include "tripack/canon.hpp"
#include "tripack/construct.hpp"
#include "tripack/enumerate.hpp"
#include "tripack/io.hpp"

namespace tripack {

/// {"kind": "ChromaticDiffers", "witness": {...}}. Vertex references use
/// packing labels (vertex v of a union graph is label v+1); graph indices 0
/// and 1 refer to the first and second union.
Json certificate_to_json(const DistinctnessCertificate& cert);
/// Throws Error(Parse).
DistinctnessCertificate certificate_from_json(const Json& j);

/// {"outcome": "nonexistent"} | {"outcome": "unique", "packing": ...} |
/// {"outcome": "pair", "method": ..., "packings": [p1, p2], "certificate": ...}
Json outcome_to_json(const PackingOutcome& outcome);

Json enumeration_to_json(const EnumerationResult& r);

}  // namespace tripack
