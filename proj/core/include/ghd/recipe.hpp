#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ghd/catalog.hpp"
#include "ghd/composite.hpp"
#include "ghd/frame.hpp"
#include "ghd/latin.hpp"
#include "ghd/search.hpp"

namespace ghd::recipe {

// A recipe is {"steps": [{"name": .., "op": .., ...}], "output": name}. Steps
// may refer to each other in any order; references are step names,
// "catalog:<id>", "file:<path>" (relative to the recipe) and "mols:<q>[:<t>]".
//
// ops: mols, imols, expand, load, frame_from_mols_imols,
//      basic_frame_construction, stinson_rtd, power2, product, verify
struct Recipe {
  nlohmann::json doc;
  std::filesystem::path base_dir;
};

Recipe load_recipe(const std::filesystem::path& path);
Recipe parse_recipe(const nlohmann::json& doc, std::filesystem::path base_dir = ".");

using Value = std::variant<composite::StarDesign, frames::GhfArray, latin::MolsSet, latin::ImolsSet>;

struct RecipeResult {
  Value output;
  std::vector<std::string> log;  // one line per executed step, in execution order
};

struct RunOptions {
  search::SearchBudget budget;       // for IMOLS searches
  const catalog::Catalog* catalog = nullptr;  // loaded on first use when null
};

// MalformedInput for unknown ops, missing fields or cycles; MissingIngredient
// for unresolved references; InvalidDesign when a verify step fails.
RecipeResult run_recipe(const Recipe& r, const RunOptions& opts = {});

}  // namespace ghd::recipe
