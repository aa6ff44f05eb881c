#pragma once

// Brute-force checks written without the library's verifiers, used as
// independent references in the tests.

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ghd/design.hpp"
#include "ghd/latin.hpp"
#include "ghd/starter.hpp"

namespace oracle {

inline std::filesystem::path source_dir() { return GHD_SOURCE_DIR; }
inline std::filesystem::path data_path(const std::string& f) { return source_dir() / "data" / f; }

// Lists of label strings; independent of symbol ids.
using LabelBlock = std::set<std::string>;
using LabelGrid = std::vector<std::vector<LabelBlock>>;

inline LabelGrid labels_of(const ghd::GhdArray& g) {
  LabelGrid out(g.side(), std::vector<LabelBlock>(g.side()));
  for (int r = 0; r < g.side(); ++r)
    for (int c = 0; c < g.side(); ++c)
      if (const auto& cell = g.cell(r, c))
        for (auto x : *cell) out[r][c].insert(ghd::to_string(g.label(x)));
  return out;
}

// Every row and column a partition of all v symbols into k-sets, every pair
// at most once.
inline bool is_ghd(const ghd::GhdArray& g) {
  const int s = g.side(), v = g.v(), k = g.params().k;
  std::map<std::pair<int, int>, int> pairs;
  std::vector<std::vector<int>> row_count(s, std::vector<int>(v)), col_count(s, std::vector<int>(v));
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      const auto& cell = g.cell(r, c);
      if (!cell) continue;
      if (cell->size() != k) return false;
      const auto& m = cell->members();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (static_cast<int>(m[i]) >= v) return false;
        ++row_count[r][m[i]];
        ++col_count[c][m[i]];
        for (std::size_t j = i + 1; j < m.size(); ++j) {
          if (m[i] == m[j]) return false;
          if (++pairs[{std::min(m[i], m[j]), std::max(m[i], m[j])}] > g.params().lambda) return false;
        }
      }
    }
  for (int i = 0; i < s; ++i)
    for (int x = 0; x < v; ++x)
      if (row_count[i][x] != 1 || col_count[i][x] != 1) return false;
  return true;
}

inline bool pairwise_hole(const ghd::GhdArray& g, const std::vector<ghd::SymbolId>& hole) {
  std::set<ghd::SymbolId> h(hole.begin(), hole.end());
  for (const auto& cell : g.cells()) {
    if (!cell) continue;
    int n = 0;
    for (auto x : *cell) n += h.count(x) ? 1 : 0;
    if (n > 1) return false;
  }
  return true;
}

inline bool empty_subarray(const ghd::GhdArray& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  for (int r : rows)
    for (int c : cols)
      if (g.cell(r, c)) return false;
  return true;
}

// Pairs of symbols that never share a block.
inline std::vector<std::pair<int, int>> disjoint_pairs(const ghd::GhdArray& g) {
  std::set<std::pair<int, int>> met;
  for (const auto& cell : g.cells())
    if (cell)
      for (auto a : *cell)
        for (auto b : *cell)
          if (a < b) met.insert({static_cast<int>(a), static_cast<int>(b)});
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < g.v(); ++a)
    for (int b = a + 1; b < g.v(); ++b)
      if (!met.count({a, b})) out.push_back({a, b});
  return out;
}

inline bool orthogonal(const ghd::latin::Square& a, const ghd::latin::Square& b) {
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (a.cells[i] < 0 || b.cells[i] < 0) continue;
    if (!seen.insert({a.cells[i], b.cells[i]}).second) return false;
  }
  return true;
}

inline bool latin(const ghd::latin::Square& a) {
  const int n = a.order;
  for (int i = 0; i < n; ++i) {
    std::set<int> row, col;
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) < 0 || a.at(i, j) >= n || a.at(j, i) < 0 || a.at(j, i) >= n) return false;
      row.insert(a.at(i, j));
      col.insert(a.at(j, i));
    }
    if (static_cast<int>(row.size()) != n || static_cast<int>(col.size()) != n) return false;
  }
  return true;
}

inline bool is_mols(const ghd::latin::MolsSet& m) {
  for (const auto& sq : m.squares)
    if (sq.order != m.order || !latin(sq)) return false;
  for (std::size_t i = 0; i < m.squares.size(); ++i)
    for (std::size_t j = i + 1; j < m.squares.size(); ++j)
      if (!orthogonal(m.squares[i], m.squares[j])) return false;
  return true;
}

// Single-hole IMOLS: hole x hole empty, rows and columns through the hole
// miss exactly the hole symbols, the rest latin, and the superposition of
// any two squares covers each pair outside hole x hole exactly once.
inline bool is_imols(const ghd::latin::ImolsSet& m) {
  const int n = m.order;
  std::set<int> hole;
  if (!m.holes.empty()) hole.insert(m.holes.front().begin(), m.holes.front().end());
  for (const auto& sq : m.squares) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        bool in_hole = hole.count(r) && hole.count(c);
        if (in_hole != (sq.at(r, c) < 0)) return false;
      }
    std::set<std::set<int>> missing_sets;
    for (int i = 0; i < n; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        std::multiset<int> line;
        for (int j = 0; j < n; ++j) {
          int x = dir ? sq.at(j, i) : sq.at(i, j);
          if (x >= 0) line.insert(x);
        }
        std::set<int> uline(line.begin(), line.end());
        if (uline.size() != line.size()) return false;
        std::set<int> missing;
        for (int x = 0; x < n; ++x)
          if (!uline.count(x)) missing.insert(x);
        if (hole.count(i)) {
          if (missing.size() != hole.size()) return false;
          missing_sets.insert(missing);
        } else if (!missing.empty()) {
          return false;
        }
      }
    }
    if (missing_sets.size() > 1) return false;
  }
  for (std::size_t p = 0; p < m.squares.size(); ++p)
    for (std::size_t q = p + 1; q < m.squares.size(); ++q) {
      std::set<std::pair<int, int>> seen;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          int a = m.squares[p].at(r, c), b = m.squares[q].at(r, c);
          if (a < 0) continue;
          if (!seen.insert({a, b}).second) return false;
        }
      if (seen.size() != static_cast<std::size_t>(n * n - hole.size() * hole.size())) return false;
    }
  return true;
}

// Each pair of points in exactly one block; each class partitions the points.
inline bool pair_coverage_exact(int v, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> count(static_cast<std::size_t>(v) * v);
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (i != j) ++count[static_cast<std::size_t>(b[i]) * v + b[j]];
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      if (a != b && count[static_cast<std::size_t>(a) * v + b] != 1) return false;
  return true;
}

inline bool classes_partition(int v, const std::vector<std::vector<int>>& blocks,
                              const std::vector<std::vector<int>>& classes) {
  for (const auto& cls : classes) {
    std::vector<int> seen(v);
    for (int bi : cls)
      for (int x : blocks[bi]) ++seen[x];
    for (int x : seen)
      if (x != 1) return false;
  }
  return true;
}

// Differences of a transitive starter. Pure differences {+-d} within a
// level, mixed differences b_1 - a_0, and infinite points must all be
// distinct for the development to meet each pair at most once.
inline bool starter_differences_distinct(const ghd::starter::TransitiveStarterAdder& sa) {
  const int g = sa.group_order();
  std::set<std::pair<int, int>> pure;  // (level, d)
  std::set<int> mixed, inf;
  for (const auto& b : sa.blocks)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const auto &p = b.points[i], &q = b.points[j];
        if (p.infinite || q.infinite) continue;
        int d = ((q.value - p.value) % g + g) % g;
        if (p.level == q.level) {
          if (d == 0 || !pure.insert({p.level, d}).second) return false;
        } else if (p.level == 0) {
          if (!mixed.insert(d).second) return false;
        }
      }
  for (const auto& b : sa.blocks)
    for (const auto& p : b.points)
      if (p.infinite && !inf.insert(p.value).second) return false;
  return true;
}

// Same for the three-level intransitive starter: every ordered pair of
// distinct points of a block gives (level_p, level_q, q - p), all distinct.
inline bool intransitive_differences_distinct(const ghd::starter::IntransitiveStarterAdder& sa) {
  const int g = sa.n;
  std::set<std::tuple<int, int, int>> seen;
  auto add = [&](const ghd::starter::Triple& t) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        int d = ((t[j].value - t[i].value) % g + g) % g;
        if (t[i].level == t[j].level && d == 0) return false;
        if (!seen.insert({t[i].level, t[j].level, d}).second) return false;
      }
    return true;
  };
  for (const auto& b : sa.S)
    if (!add(b.points)) return false;
  for (const auto& t : sa.R)
    if (!add(t)) return false;
  for (const auto& t : sa.C)
    if (!add(t)) return false;
  return true;
}

}  // namespace oracle
