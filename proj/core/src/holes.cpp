#include <boost/dynamic_bitset.hpp>

#include "ghd/verify.hpp"

namespace ghd {

namespace {

using Bits = boost::dynamic_bitset<>;

struct HoleSearch {
  std::vector<Bits> free_with;  // free_with[u][w]: u and w share no block
  int target;
  std::vector<SymbolId> chosen;

  // Drop candidates that cannot be completed to a hole of the target size.
  void trim(Bits& cand, int need) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto u = cand.find_first(); u != Bits::npos; u = cand.find_next(u))
        if (static_cast<int>((cand & free_with[u]).count()) < need - 1) {
          cand.reset(u);
          changed = true;
        }
    }
  }

  bool dfs(Bits cand) {
    const int need = target - static_cast<int>(chosen.size());
    if (need == 0) return true;
    trim(cand, need);
    for (auto u = cand.find_first(); u != Bits::npos; u = cand.find_first()) {
      if (static_cast<int>(cand.count()) < need) return false;
      cand.reset(u);
      chosen.push_back(static_cast<SymbolId>(u));
      if (dfs(cand & free_with[u])) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<SymbolId>> find_pairwise_hole(const GhdArray& g, int size) {
  const int v = g.v();
  if (size < 0 || size > v) return std::nullopt;
  HoleSearch hs;
  hs.target = size;
  hs.free_with.assign(v, Bits(v));
  for (auto& b : hs.free_with) b.set();
  for (int u = 0; u < v; ++u) hs.free_with[u].reset(u);
  for (const auto& c : g.cells())
    if (c)
      for (SymbolId x : *c)
        for (SymbolId y : *c)
          if (x != y) hs.free_with[x].reset(y);
  Bits all(v);
  all.set();
  if (hs.dfs(all)) return hs.chosen;
  return std::nullopt;
}

bool is_empty_subsquare(const GhdArray& g, const Subsquare& sq) {
  for (int r : sq.rows)
    for (int c : sq.cols)
      if (g.cell(r, c)) return false;
  return true;
}

std::optional<Subsquare> find_empty_subsquare(const GhdArray& g, int e) {
  const int s = g.side();
  if (e < 0 || e > s) return std::nullopt;
  if (e == 0) return Subsquare{};
  std::vector<Bits> empty_cols(s, Bits(s));
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c)
      if (!g.cell(r, c)) empty_cols[r].set(c);

  auto take_cols = [&](const Bits& bits) {
    Subsquare sq;
    for (auto c = bits.find_first(); c != Bits::npos && static_cast<int>(sq.cols.size()) < e; c = bits.find_next(c))
      sq.cols.push_back(static_cast<int>(c));
    return sq;
  };

  if (e <= 3) {
    std::vector<int> rows;
    std::optional<Subsquare> found;
    auto rec = [&](auto&& self, int from, const Bits& cols) -> bool {
      if (static_cast<int>(rows.size()) == e) {
        Subsquare sq = take_cols(cols);
        sq.rows = rows;
        found = sq;
        return true;
      }
      for (int r = from; r < s; ++r) {
        Bits next = cols & empty_cols[r];
        if (static_cast<int>(next.count()) < e) continue;
        rows.push_back(r);
        if (self(self, r + 1, next)) return true;
        rows.pop_back();
      }
      return false;
    };
    Bits all(s);
    all.set();
    rec(rec, 0, all);
    return found;
  }

  Bits cols(s);
  cols.set();
  std::vector<int> rows;
  for (int r = 0; r < s && static_cast<int>(rows.size()) < e; ++r) {
    Bits next = cols & empty_cols[r];
    if (static_cast<int>(next.count()) < e) continue;
    cols = next;
    rows.push_back(r);
  }
  if (static_cast<int>(rows.size()) < e) return std::nullopt;
  Subsquare sq = take_cols(cols);
  sq.rows = rows;
  return sq;
}

}  // namespace ghd
