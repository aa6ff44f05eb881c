#pragma once

#include <nlohmann/json.hpp>

#include "ghd/latin.hpp"

namespace ghd::latin {

// {"order", "count", "hole": [...] | "holes": [[...], ...], "squares"}; empty
// cells are null.
nlohmann::json to_json(const ImolsSet& m);
nlohmann::json to_json(const MolsSet& m);
ImolsSet imols_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ResolvablePbd& pbd);

}  // namespace ghd::latin
