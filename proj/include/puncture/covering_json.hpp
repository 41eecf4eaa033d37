#pragma once

#include <string>

#include "json.hpp"
#include "puncture/covering.hpp"

namespace puncture {

// Schema: {"level_N": int (0 = user-supplied), "scale_k": "num/den",
//          "c": ["num/den", ...], "b": [...], "l": [...], "order": int}
// Rationals are exact "num/den" strings ("num" when the denominator is 1);
// round-trips are bit-exact.
nlohmann::json covering_to_json(const CoveringData& cov);
CoveringData covering_from_json(const nlohmann::json& j);

std::string covering_to_json_string(const CoveringData& cov);
CoveringData covering_from_json_string(const std::string& text);

} // namespace puncture
