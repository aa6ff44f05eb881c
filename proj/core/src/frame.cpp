#include "ghd/frame.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ghd/error.hpp"
#include "ghd/grid_io.hpp"

namespace ghd::frames {

int GhfArray::span_start(int i) const { return std::accumulate(spans.begin(), spans.begin() + i, 0); }

VerificationReport verify_frame(const GhfArray& f) {
  VerificationReport rep;
  const GhdArray& g = f.grid;
  const int s = g.side(), v = g.v(), k = g.params().k;
  if (f.groups.size() != f.spans.size()) fail(ErrorKind::MalformedInput, "one group per span required");
  if (std::accumulate(f.spans.begin(), f.spans.end(), 0) != s) fail(ErrorKind::MalformedInput, "spans do not add up to the side");
  if (std::any_of(f.spans.begin(), f.spans.end(), [](int x) { return x < 0; }))
    fail(ErrorKind::MalformedInput, "negative span");

  std::vector<int> group_of(v, -1);
  for (std::size_t i = 0; i < f.groups.size(); ++i)
    for (SymbolId x : f.groups[i]) {
      if (x >= static_cast<SymbolId>(v)) fail(ErrorKind::MalformedInput, "group symbol out of range");
      if (group_of[x] != -1) rep.add(ViolationKind::ParamBound, -1, -1, "symbol in two groups");
      group_of[x] = static_cast<int>(i);
    }
  for (int x = 0; x < v; ++x)
    if (group_of[x] == -1) rep.add(ViolationKind::ParamBound, -1, -1, to_string(g.label(x)) + " is in no group");
  if (!rep.ok()) return rep;

  std::vector<int> span_of(s);
  for (std::size_t i = 0, r = 0; i < f.spans.size(); ++i)
    for (int t = 0; t < f.spans[i]; ++t) span_of[r++] = static_cast<int>(i);

  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      const Cell& b = g.cell(r, c);
      if (!b) continue;
      if (b->size() != k) rep.add(ViolationKind::CellArity, r, c, "block of size " + std::to_string(b->size()));
      if (span_of[r] == span_of[c]) rep.add(ViolationKind::CellArity, r, c, "cell inside a diagonal hole is filled");
    }

  for (int dir = 0; dir < 2; ++dir)
    for (int line = 0; line < s; ++line) {
      std::vector<int> seen(v);
      for (int j = 0; j < s; ++j) {
        const Cell& b = dir == 0 ? g.cell(line, j) : g.cell(j, line);
        if (b)
          for (SymbolId x : *b) ++seen[x];
      }
      for (int x = 0; x < v; ++x) {
        int want = group_of[x] == span_of[line] ? 0 : 1;
        if (seen[x] != want)
          rep.add(dir == 0 ? ViolationKind::RowCover : ViolationKind::ColCover, dir == 0 ? line : -1, dir == 0 ? -1 : line,
                  to_string(g.label(x)) + " seen " + std::to_string(seen[x]) + " times");
      }
    }

  std::set<std::pair<SymbolId, SymbolId>> pairs;
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      const Cell& b = g.cell(r, c);
      if (!b) continue;
      for (int i = 0; i < b->size(); ++i)
        for (int j = i + 1; j < b->size(); ++j) {
          SymbolId x = (*b)[i], y = (*b)[j];
          if (group_of[x] == group_of[y]) rep.add(ViolationKind::PairExcess, r, c, "pair inside a group");
          if (!pairs.emplace(x, y).second) rep.add(ViolationKind::PairExcess, r, c, "pair repeated");
        }
    }
  return rep;
}

FrameBuild frame_from_mols_imols(int h, int m, const std::vector<int>& v_parts, const latin::MolsSet& mols,
                                 const ImolsSupplier& imols) {
  if (h < 1 || m < 2) fail(ErrorKind::Precondition, "need h >= 1 and m >= 2");
  if (mols.order != m || mols.count() < 4) fail(ErrorKind::CountMismatch, "need 4 MOLS of order m");
  if (static_cast<int>(v_parts.size()) != m - 1) fail(ErrorKind::SizeMismatch, "need m - 1 hole sizes");
  if (std::any_of(v_parts.begin(), v_parts.end(), [](int x) { return x < 0; }))
    fail(ErrorKind::Precondition, "negative hole size");
  if (latin::verify_mols(latin::MolsSet{m, {mols.squares.begin(), mols.squares.begin() + 4}}).ok() == false)
    fail(ErrorKind::InvalidDesign, "the base squares are not mutually orthogonal");

  // Move the cells where square 4 holds 0 onto the diagonal.
  const auto& marker = mols.squares[3];
  std::vector<int> perm(m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      if (marker.at(r, c) == 0) perm[c] = r;
  auto base = [&](int q, int r, int c) -> int { return q * m + mols.squares[q].at(r, c); };
  std::vector<int> inverse(m);
  for (int c = 0; c < m; ++c) inverse[perm[c]] = c;

  const int v = std::accumulate(v_parts.begin(), v_parts.end(), 0);
  const int finite = 3 * m * h;
  std::vector<int> inf_offset(m, 0), border_offset(m, 0);
  for (int l = 1; l < m; ++l) {
    inf_offset[l] = l == 1 ? finite : inf_offset[l - 1] + 3 * v_parts[l - 2];
    border_offset[l] = l == 1 ? m * h : border_offset[l - 1] + v_parts[l - 2];
  }

  std::vector<Label> labels;
  for (int a = 0; a < 3 * m; ++a)
    for (int z = 0; z < h; ++z)
      labels.push_back(PlainLabel{std::to_string(a % m) + "_" + std::to_string(a / m) + "." + std::to_string(z)});
  for (int l = 1; l < m; ++l)
    for (int q = 0; q < 3; ++q)
      for (int c = 0; c < v_parts[l - 1]; ++c)
        labels.push_back(PlainLabel{"inf" + std::to_string(l) + "." + std::to_string(q) + "." + std::to_string(c)});

  std::vector<latin::ImolsSet> ingredients(m);
  for (int l = 1; l < m; ++l) {
    const int a = v_parts[l - 1];
    auto got = imols(h + a, a);
    if (!got) fail(ErrorKind::MissingIngredient, "3 IMOLS(" + std::to_string(h + a) + "," + std::to_string(a) + ")");
    latin::ImolsSet set = *got;
    if (set.count() < 3 || set.order != h + a || set.hole_size() != a || !latin::verify_imols(set).ok())
      fail(ErrorKind::MissingIngredient, "supplied IMOLS(" + std::to_string(h + a) + "," + std::to_string(a) + ") is unusable");
    set.squares.resize(3);
    ingredients[l] = latin::normalize_hole(set);
  }

  const int side = m * h + v;
  GridBuilder grid(side, make_symbols(labels));
  for (int i = 0; i < m; ++i)
    for (int jn = 0; jn < m; ++jn) {
      const int j0 = inverse[jn];  // original column
      const int l = marker.at(i, j0);
      if (l == 0) continue;
      const auto& ing = ingredients[l];
      const int y = h + v_parts[l - 1];
      auto map_line = [&](int t, int block) { return t < h ? block * h + t : border_offset[l] + (t - h); };
      for (int r = 0; r < y; ++r)
        for (int c = 0; c < y; ++c) {
          if (ing.squares[0].at(r, c) < 0) continue;
          std::vector<SymbolId> b;
          for (int q = 0; q < 3; ++q) {
            int sigma = ing.squares[q].at(r, c);
            b.push_back(sigma < h ? static_cast<SymbolId>(base(q, i, j0) * h + sigma)
                                  : static_cast<SymbolId>(inf_offset[l] + q * v_parts[l - 1] + (sigma - h)));
          }
          grid.place(map_line(r, i), map_line(c, jn), Block(std::move(b)));
        }
    }

  FrameBuild out;
  out.column_permutation = perm;
  out.frame.grid = grid.build();
  for (int i = 0; i < m; ++i) {
    std::vector<SymbolId> g;
    for (int q = 0; q < 3; ++q)
      for (int z = 0; z < h; ++z) g.push_back(static_cast<SymbolId>(base(q, i, inverse[i]) * h + z));
    std::sort(g.begin(), g.end());
    out.frame.groups.push_back(std::move(g));
    out.frame.spans.push_back(h);
  }
  std::vector<SymbolId> infs;
  for (int x = finite; x < finite + 3 * v; ++x) infs.push_back(static_cast<SymbolId>(x));
  out.frame.groups.push_back(std::move(infs));
  out.frame.spans.push_back(v);
  return out;
}

namespace {

bool distinct_in_range(const std::vector<int>& xs, int n) {
  std::vector<char> seen(n);
  for (int x : xs) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

GhdArray basic_frame_construction(const GhfArray& f, int e, int u, const std::vector<Ingredient>& ingredients) {
  const int m = static_cast<int>(f.groups.size());
  const int s = f.grid.side();
  if (e < 0 || u < 0) fail(ErrorKind::Precondition, "negative e or u");
  if (static_cast<int>(ingredients.size()) < m)
    fail(ErrorKind::MissingIngredient, "need one ingredient per group, got " + std::to_string(ingredients.size()));
  if (static_cast<int>(ingredients.size()) > m) fail(ErrorKind::SizeMismatch, "more ingredients than groups");

  // Validate everything before touching the grid.
  std::vector<std::vector<SymbolId>> u_of(m);
  for (int i = 0; i < m; ++i) {
    const auto& ing = ingredients[i];
    const int side = ing.design.side();
    const std::string who = "ingredient " + std::to_string(i);
    if (side != f.spans[i] + e) fail(ErrorKind::HoleMisaligned, who + " has side " + std::to_string(side));
    if (static_cast<int>(ing.sub_rows.size()) != e || static_cast<int>(ing.sub_cols.size()) != e ||
        !distinct_in_range(ing.sub_rows, side) || !distinct_in_range(ing.sub_cols, side))
      fail(ErrorKind::HoleMisaligned, who + ": designated rows/columns must be e distinct indices");
    if (ing.design.v() != static_cast<int>(f.groups[i].size()) + u)
      fail(ErrorKind::SymbolClash, who + " has " + std::to_string(ing.design.v()) + " symbols, expected " +
                                       std::to_string(f.groups[i].size() + u));
    if (ing.design.params() != f.grid.params()) fail(ErrorKind::SymbolClash, who + " has different block parameters");
    std::set<SymbolId> corner;
    for (int r : ing.sub_rows)
      for (int c : ing.sub_cols)
        if (const Cell& b = ing.design.cell(r, c)) corner.insert(b->begin(), b->end());
    const bool last = i == m - 1;
    std::vector<SymbolId> us = ing.u_symbols;
    if (us.empty() && !(last && u == 0)) us.assign(corner.begin(), corner.end());
    if (last && u == 0) us.clear();
    if (static_cast<int>(us.size()) != u)
      fail(ErrorKind::HoleMisaligned, who + ": designated sub-array carries " + std::to_string(us.size()) +
                                          " symbols, expected " + std::to_string(u));
    if (!last)
      for (SymbolId x : corner)
        if (std::find(us.begin(), us.end(), x) == us.end())
          fail(ErrorKind::HoleMisaligned, who + ": sub-array uses a symbol outside U");
    for (SymbolId x : us)
      if (x >= static_cast<SymbolId>(ing.design.v())) fail(ErrorKind::SymbolClash, who + ": bad U symbol");
    u_of[i] = us;
  }
  for (int r = 0; r < s; ++r)
    for (int i = 0, start = 0; i < m; start += f.spans[i], ++i)
      for (int c = start; c < start + f.spans[i]; ++c)
        if (r >= start && r < start + f.spans[i] && f.grid.cell(r, c))
          fail(ErrorKind::HoleMisaligned, "frame has a filled cell inside a diagonal hole");

  std::vector<Symbol> symbols = f.grid.symbols();
  std::set<Label> used;
  for (const auto& sym : symbols) used.insert(sym.label);
  std::vector<SymbolId> u_ids;
  for (int t = 0; t < u; ++t) {
    std::string name = "u" + std::to_string(t);
    while (used.count(PlainLabel{name})) name += "'";
    used.insert(PlainLabel{name});
    u_ids.push_back(static_cast<SymbolId>(symbols.size()));
    symbols.push_back({u_ids.back(), PlainLabel{name}});
  }

  GridBuilder grid(s + e, symbols, f.grid.params());
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c)
      if (const Cell& b = f.grid.cell(r, c)) grid.place(r, c, *b);

  for (int i = 0, start = 0; i < m; start += f.spans[i], ++i) {
    const auto& ing = ingredients[i];
    const int side = ing.design.side();
    const bool last = i == m - 1;
    auto line_map = [&](const std::vector<int>& designated) {
      std::vector<int> map(side, -1);
      for (int t = 0; t < e; ++t) map[designated[t]] = s + t;
      for (int x = 0, next = start; x < side; ++x)
        if (map[x] == -1) map[x] = next++;
      return map;
    };
    auto rows = line_map(ing.sub_rows), cols = line_map(ing.sub_cols);
    std::vector<SymbolId> sym_map(ing.design.v(), 0);
    std::vector<char> is_u(ing.design.v());
    for (int t = 0; t < u; ++t) {
      sym_map[u_of[i][t]] = u_ids[t];
      is_u[u_of[i][t]] = 1;
    }
    std::vector<SymbolId> group = f.groups[i];
    std::sort(group.begin(), group.end());
    for (int x = 0, next = 0; x < ing.design.v(); ++x)
      if (!is_u[x]) sym_map[x] = group[next++];
    for (int r = 0; r < side; ++r)
      for (int c = 0; c < side; ++c) {
        const Cell& b = ing.design.cell(r, c);
        if (!b) continue;
        if (!last && rows[r] >= s && cols[c] >= s) continue;
        std::vector<SymbolId> mapped;
        for (SymbolId x : *b) mapped.push_back(sym_map[x]);
        grid.place(rows[r], cols[c], Block(std::move(mapped)));
      }
  }
  return grid.build();
}

nlohmann::json to_json(const GhfArray& f) {
  nlohmann::json j = grid_to_json(f.grid);
  j["groups"] = f.groups;
  j["spans"] = f.spans;
  return j;
}

GhfArray frame_from_json(const nlohmann::json& j) {
  try {
    GhfArray f;
    f.grid = grid_from_json(j);
    f.groups = j.at("groups").get<std::vector<std::vector<SymbolId>>>();
    f.spans = j.at("spans").get<std::vector<int>>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

}  // namespace ghd::frames
