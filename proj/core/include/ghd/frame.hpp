#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "ghd/design.hpp"
#include "ghd/latin.hpp"
#include "ghd/verify.hpp"

namespace ghd::frames {

// Generalized Howell frame: the grid is cut into consecutive spans; group i
// governs the rows and columns of span i.
struct GhfArray {
  GhdArray grid;
  std::vector<std::vector<SymbolId>> groups;
  std::vector<int> spans;

  int span_start(int i) const;
};

VerificationReport verify_frame(const GhfArray& f);

// Returns 3 (or more) IMOLS(order, hole); nullopt when unavailable.
using ImolsSupplier = std::function<std::optional<latin::ImolsSet>(int order, int hole)>;

struct FrameBuild {
  GhfArray frame;
  std::vector<int> column_permutation;  // old column of the m x m base -> new column
};

// Frame of type (3h)^m (3v)^1 with spans h^m v^1, v = sum of v_parts, from 4
// MOLS(m) and, for each l = 1..m-1, 3 IMOLS(h + v_l, v_l).
FrameBuild frame_from_mols_imols(int h, int m, const std::vector<int>& v_parts, const latin::MolsSet& mols,
                                 const ImolsSupplier& imols);

struct Ingredient {
  GhdArray design;
  std::vector<int> sub_rows;  // e rows and columns carried to the new border
  std::vector<int> sub_cols;
  std::vector<SymbolId> u_symbols;  // defaults to the symbols of the sub-array
};

// Adds e rows and columns. Ingredient i is a GHD(s_i + e, g_i + u) for span
// i; its designated e x e sub-array moves to the new corner and, except for
// the last ingredient, is deleted.
GhdArray basic_frame_construction(const GhfArray& f, int e, int u, const std::vector<Ingredient>& ingredients);

nlohmann::json to_json(const GhfArray& f);
GhfArray frame_from_json(const nlohmann::json& j);

}  // namespace ghd::frames
