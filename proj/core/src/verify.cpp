#include "ghd/verify.hpp"

#include <sstream>

#include "ghd/error.hpp"

namespace ghd {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::CellArity: return "CellArity";
    case ViolationKind::RowCover: return "RowCover";
    case ViolationKind::ColCover: return "ColCover";
    case ViolationKind::PairExcess: return "PairExcess";
    case ViolationKind::ParamBound: return "ParamBound";
  }
  return "?";
}

int VerificationReport::count(ViolationKind kind) const {
  int n = 0;
  for (const auto& v : violations) n += v.kind == kind;
  return n;
}

void VerificationReport::merge(const VerificationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string VerificationReport::summary(std::size_t max_lines) const {
  std::ostringstream os;
  if (ok()) return "ok";
  os << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_lines; ++i) {
    const auto& v = violations[i];
    os << "\n  " << to_string(v.kind);
    if (v.row >= 0 || v.col >= 0) os << " at (" << v.row << "," << v.col << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
  }
  if (violations.size() > max_lines) os << "\n  ...";
  return os.str();
}

namespace {

void check_lines(const GhdArray& g, bool rows, VerificationReport& rep) {
  const int s = g.side();
  const int v = g.v();
  const auto kind = rows ? ViolationKind::RowCover : ViolationKind::ColCover;
  std::vector<int> seen(v);
  for (int line = 0; line < s; ++line) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < s; ++j) {
      const Cell& c = rows ? g.cell(line, j) : g.cell(j, line);
      if (c)
        for (SymbolId x : *c) ++seen[x];
    }
    for (int x = 0; x < v; ++x) {
      if (seen[x] == 1) continue;
      std::string what = seen[x] == 0 ? " missing" : " appears " + std::to_string(seen[x]) + " times";
      rep.add(kind, rows ? line : -1, rows ? -1 : line, to_string(g.label(x)) + what);
    }
  }
}

}  // namespace

VerificationReport verify_ghd(const GhdArray& g) {
  VerificationReport rep;
  const Params& p = g.params();
  const int s = g.side();
  const int v = g.v();
  if (p.t != 2 || p.k < 2 || p.lambda < 1) {
    rep.add(ViolationKind::ParamBound, -1, -1, "unsupported parameters");
    return rep;
  }
  if (v % p.k != 0) rep.add(ViolationKind::ParamBound, -1, -1, "v is not a multiple of k");
  if (v / p.k > s) rep.add(ViolationKind::ParamBound, -1, -1, "v/k exceeds the side");

  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c)
      if (const Cell& b = g.cell(r, c); b && b->size() != p.k)
        rep.add(ViolationKind::CellArity, r, c, "block of size " + std::to_string(b->size()));

  check_lines(g, true, rep);
  check_lines(g, false, rep);

  // Triangular pair counters, index x*(2v-x-1)/2 + (y-x-1) for x < y.
  std::vector<unsigned char> pairs(static_cast<std::size_t>(v) * (v > 0 ? v - 1 : 0) / 2);
  auto pair_index = [v](std::size_t x, std::size_t y) { return x * (2 * v - x - 1) / 2 + (y - x - 1); };
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      const Cell& b = g.cell(r, c);
      if (!b) continue;
      const auto& m = b->members();
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
          auto& cnt = pairs[pair_index(m[i], m[j])];
          if (cnt < 255) ++cnt;
          if (cnt == p.lambda + 1)
            rep.add(ViolationKind::PairExcess, r, c,
                    "pair {" + to_string(g.label(m[i])) + "," + to_string(g.label(m[j])) + "} repeated");
        }
    }
  return rep;
}

int star_hole_size(const GhdArray& g) { return g.v() - g.side() * (g.params().k - 1); }

VerificationReport verify_star(const GhdArray& g, const std::vector<SymbolId>& hole) {
  VerificationReport rep;
  std::vector<char> in(g.v());
  for (SymbolId x : hole) {
    if (x >= static_cast<SymbolId>(g.v())) fail(ErrorKind::MalformedInput, "hole symbol out of range");
    if (in[x]) fail(ErrorKind::MalformedInput, "hole lists a symbol twice");
    in[x] = 1;
  }
  if (static_cast<int>(hole.size()) != star_hole_size(g))
    rep.add(ViolationKind::ParamBound, -1, -1,
            "hole has " + std::to_string(hole.size()) + " symbols, expected " + std::to_string(star_hole_size(g)));
  for (int r = 0; r < g.side(); ++r)
    for (int c = 0; c < g.side(); ++c) {
      const Cell& b = g.cell(r, c);
      if (!b) continue;
      int inside = 0;
      for (SymbolId x : *b) inside += in[x];
      if (inside > 1) rep.add(ViolationKind::PairExcess, r, c, "block meets the hole twice");
    }
  return rep;
}

RowProfile row_profile(const GhdArray& g) {
  RowProfile p;
  const int s = g.side();
  p.filled = g.params().k > 0 ? g.v() / g.params().k : 0;
  p.empty = s - p.filled;
  p.empty_fraction = s > 0 ? boost::rational<long long>(p.empty, s) : boost::rational<long long>(0);
  return p;
}

GhdArray apply_relabeling(const GhdArray& g, const std::vector<int>& row_perm, const std::vector<int>& col_perm,
                          const std::vector<SymbolId>& symbol_perm) {
  const int s = g.side();
  auto is_perm = [](const auto& p, std::size_t n) {
    if (p.size() != n) return false;
    std::vector<char> seen(n);
    for (auto x : p) {
      if (static_cast<long long>(x) < 0 || static_cast<std::size_t>(x) >= n || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  };
  if (!is_perm(row_perm, s) || !is_perm(col_perm, s) || !is_perm(symbol_perm, g.v()))
    fail(ErrorKind::SizeMismatch, "relabeling maps are not permutations of the right sizes");
  std::vector<Symbol> syms(g.v());
  for (const auto& sym : g.symbols()) syms[symbol_perm[sym.id]] = {symbol_perm[sym.id], sym.label};
  std::vector<Cell> cells(static_cast<std::size_t>(s) * s);
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      const Cell& b = g.cell(r, c);
      if (!b) continue;
      std::vector<SymbolId> m;
      for (SymbolId x : *b) m.push_back(symbol_perm[x]);
      cells[static_cast<std::size_t>(row_perm[r]) * s + col_perm[c]] = Block(std::move(m));
    }
  return GhdArray(s, std::move(syms), std::move(cells), g.params());
}

}  // namespace ghd
