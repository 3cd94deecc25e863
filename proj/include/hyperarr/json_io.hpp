#pragma once

#include <json.hpp>

#include <string>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/discriminantal.hpp"
#include "hyperarr/grassmannian.hpp"
#include "hyperarr/partitions.hpp"

namespace hyperarr {

// All documents use insertion-ordered JSON so emitted bytes are
// deterministic. Hyperplane indices are 1-based on the wire (0-based
// internally).
using json = nlohmann::ordered_json;

// Arrangement document: {"k": 3, "normals": [["0","1","0"], ...],
// "labels": [...]?}. Normal entries are rational strings ("p" or "p/q");
// plain JSON integers are accepted too. Unknown fields are ignored, so
// generator output (which adds "certificate" and "generated") loads back.
json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const json& j);

std::string serialize_arrangement(const Arrangement& a);
Arrangement parse_arrangement(const std::string& text);
Arrangement load_arrangement_file(const std::string& path);

// {"s": 2, "blocks": [[1,2,3,4],[1,2,5,6],[3,4,5,6]], "tail": []}
json partition_to_json(const GoodPartition& p);
GoodPartition partition_from_json(const json& j);

// {"n":..., "k":..., "hyperplanes":..., "census": {"5":6, ...},
//  "dependent_triples": [[[...],[...],[...]], ...]}; census keys descend.
json census_to_json(const StrataCensus& c);

// {"entries": [{"support": [...], "pairing": [[..],[..],[..]],
//   "value": "...", "vanishes": bool}, ...],
//  "summary": {"checked": N, "vanishing": M}}
json quadric_scan_to_json(const QuadricScan& q);

// {"n":..., "k":..., "all_nonzero": bool, "values": {"1,2,3": "1", ...}}
json plucker_to_json(const PluckerTable& t);

// {"generic": true} or {"generic": false, "witness": [i, j, ...]}
json genericity_to_json(const GenericityReport& r);

}  // namespace hyperarr
