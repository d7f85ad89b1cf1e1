#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cuboid/enclosure.hpp"
#include "cuboid/newton.hpp"

namespace cuboid {

using Json = nlohmann::json;

std::string sha256_hex(const std::string& data);

/// Exact value as a JSON object {"rat": "a/b", "sqrt2": "c/d"}.
Json quadrat_json(const QuadRat& v);

Json newton_json(const NewtonPolygon& np, const std::vector<EdgeSolution>& edges);
Json certification_json(const CertificationReport& rep);
Json disjointness_json(const DisjointnessReport& rep);
Json gap_magnitude_json(const GapMagnitude& gap);

void newton_svg(const NewtonPolygon& np, std::ostream& os);
void regions_svg(long max_q, std::ostream& os);

/// Minimal JSON-Schema subset validator: type, properties, required,
/// items, enum, additionalProperties. Returns false and fills `why` on
/// the first violation.
bool json_matches_schema(const Json& doc, const Json& schema, std::string* why);

}  // namespace cuboid
