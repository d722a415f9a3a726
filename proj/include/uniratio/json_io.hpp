#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "uniratio/family_spec.hpp"
#include "uniratio/finite_oracle.hpp"
#include "uniratio/limit_solver.hpp"
#include "uniratio/named_families.hpp"

namespace uniratio {

/// {"k": int, "l": int, "a": [int,...], "b": [int,...]} -> validated spec.
/// Throws SpecError on malformed input.
FamilySpec spec_from_json(const nlohmann::json& j);

/// {"family": "P"|"Q"|"R"|"S"|"H"|"T", "a": int?, "b": int?,
///  "epsilon": 1|-1?, "m": int?}
FamilyParams family_from_json(const nlohmann::json& j);

/// {"lc", "intervals", "crossings", "method", "mahler"}; mahler is null when
/// not computed.
nlohmann::json result_to_json(const LimitRatioResult& result, std::optional<double> mahler);

/// {"degree", "inside", "on_circle", "outside", "method", "tolerance"}
nlohmann::json census_to_json(const RootCensus& census);

/// Parses `text` as inline JSON when it starts with '{', otherwise reads the
/// file at that path. Throws SpecError on parse failure.
nlohmann::json load_json_argument(const std::string& text);

}  // namespace uniratio
