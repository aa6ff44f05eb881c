#include "ghd/latin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ghd/error.hpp"
#include "ghd/field.hpp"

namespace ghd::latin {

MolsSet mols_from_field(int q, int t) {
  if (!prime_power(q)) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (t > q - 1) fail(ErrorKind::TooMany, "at most " + std::to_string(q - 1) + " MOLS of order " + std::to_string(q));
  if (t < 0) fail(ErrorKind::Precondition, "negative square count");
  GaloisField f(q);
  MolsSet m{q, {}};
  for (int a = 1; a <= t; ++a) {
    Square sq(q);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) sq.at(x, y) = f.add(f.mul(a, x), y);
    m.squares.push_back(std::move(sq));
  }
  return m;
}

MolsSet mols_product(const MolsSet& a, const MolsSet& b) {
  if (a.count() != b.count()) fail(ErrorKind::CountMismatch, "factors hold different numbers of squares");
  const int na = a.order, nb = b.order, n = na * nb;
  MolsSet out{n, {}};
  for (int q = 0; q < a.count(); ++q) {
    Square sq(n);
    for (int i1 = 0; i1 < na; ++i1)
      for (int i2 = 0; i2 < nb; ++i2)
        for (int j1 = 0; j1 < na; ++j1)
          for (int j2 = 0; j2 < nb; ++j2)
            sq.at(i1 * nb + i2, j1 * nb + j2) = a.squares[q].at(i1, j1) * nb + b.squares[q].at(i2, j2);
    out.squares.push_back(std::move(sq));
  }
  return out;
}

ImolsSet as_imols(const MolsSet& m) { return ImolsSet{m.order, {}, m.squares}; }

std::vector<int> hole_symbols(const ImolsSet& m, int square, int hole) {
  const auto& h = m.holes.at(hole);
  if (h.empty()) return {};
  std::vector<char> present(m.order);
  int r = *std::min_element(h.begin(), h.end());
  for (int c = 0; c < m.order; ++c) {
    int x = m.squares.at(square).at(r, c);
    if (x >= 0 && x < m.order) present[x] = 1;
  }
  std::vector<int> out;
  for (int x = 0; x < m.order; ++x)
    if (!present[x]) out.push_back(x);
  return out;
}

VerificationReport verify_imols(const ImolsSet& m) {
  VerificationReport rep;
  const int y = m.order;
  std::vector<int> hole_of(y, -1);
  for (std::size_t k = 0; k < m.holes.size(); ++k)
    for (int i : m.holes[k]) {
      if (i < 0 || i >= y) fail(ErrorKind::MalformedInput, "hole index out of range");
      if (hole_of[i] != -1) rep.add(ViolationKind::ParamBound, -1, -1, "holes share an index");
      hole_of[i] = static_cast<int>(k);
    }
  for (const auto& sq : m.squares)
    if (sq.order != y) fail(ErrorKind::SizeMismatch, "square order differs from the set order");

  // in_hole_syms[q][k][x]: symbol x is missing from the rows of hole k.
  std::vector<std::vector<std::vector<char>>> in_hole_syms(m.count());
  for (int q = 0; q < m.count(); ++q) {
    const Square& sq = m.squares[q];
    for (std::size_t k = 0; k < m.holes.size(); ++k) {
      auto hs = hole_symbols(m, q, static_cast<int>(k));
      std::vector<char> mark(y);
      for (int x : hs) mark[x] = 1;
      if (hs.size() != m.holes[k].size())
        rep.add(ViolationKind::ParamBound, -1, -1,
                "square " + std::to_string(q) + ": hole rows omit " + std::to_string(hs.size()) + " symbols");
      in_hole_syms[q].push_back(std::move(mark));
    }
    if (m.holes.size() == 2)
      for (int x = 0; x < y; ++x)
        if (in_hole_syms[q][0][x] && in_hole_syms[q][1][x])
          rep.add(ViolationKind::ParamBound, -1, -1, "the two holes share a missing symbol");

    for (int r = 0; r < y; ++r)
      for (int c = 0; c < y; ++c) {
        bool hole_cell = hole_of[r] != -1 && hole_of[r] == hole_of[c];
        int x = sq.at(r, c);
        if (hole_cell && x != -1) rep.add(ViolationKind::CellArity, r, c, "hole cell is filled");
        if (!hole_cell && (x < 0 || x >= y)) rep.add(ViolationKind::CellArity, r, c, "cell outside the hole is empty");
      }
    for (int line = 0; line < y; ++line)
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> seen(y);
        for (int j = 0; j < y; ++j) {
          int x = dir == 0 ? sq.at(line, j) : sq.at(j, line);
          if (x >= 0 && x < y) ++seen[x];
        }
        int k = hole_of[line];
        for (int x = 0; x < y; ++x) {
          int want = (k != -1 && in_hole_syms[q][k][x]) ? 0 : 1;
          if (seen[x] != want)
            rep.add(dir == 0 ? ViolationKind::RowCover : ViolationKind::ColCover, dir == 0 ? line : -1,
                    dir == 0 ? -1 : line,
                    "square " + std::to_string(q) + ": symbol " + std::to_string(x) + " seen " + std::to_string(seen[x]) +
                        " times");
        }
      }
  }
  if (!rep.ok()) return rep;
  for (int a = 0; a < m.count(); ++a)
    for (int b = a + 1; b < m.count(); ++b) {
      std::vector<char> seen(static_cast<std::size_t>(y) * y);
      for (int r = 0; r < y; ++r)
        for (int c = 0; c < y; ++c) {
          int x = m.squares[a].at(r, c), z = m.squares[b].at(r, c);
          if (x < 0) continue;
          auto& s = seen[static_cast<std::size_t>(x) * y + z];
          if (s) rep.add(ViolationKind::PairExcess, r, c, "squares " + std::to_string(a) + "," + std::to_string(b) + " repeat a pair");
          s = 1;
          for (std::size_t k = 0; k < m.holes.size(); ++k)
            if (in_hole_syms[a][k][x] && in_hole_syms[b][k][z])
              rep.add(ViolationKind::PairExcess, r, c, "pair of hole symbols");
        }
    }
  return rep;
}

VerificationReport verify_mols(const MolsSet& m) { return verify_imols(as_imols(m)); }

ImolsSet normalize_hole(const ImolsSet& m) {
  if (m.holes.size() > 1) fail(ErrorKind::Precondition, "normalization handles a single hole");
  const int y = m.order;
  if (m.holes.empty() || m.holes[0].empty()) return ImolsSet{y, {}, m.squares};
  std::vector<char> in_hole(y);
  for (int i : m.holes[0]) in_hole[i] = 1;
  std::vector<int> order;  // new index -> old index
  for (int i = 0; i < y; ++i)
    if (!in_hole[i]) order.push_back(i);
  for (int i = 0; i < y; ++i)
    if (in_hole[i]) order.push_back(i);
  const int a = static_cast<int>(m.holes[0].size());
  ImolsSet out{y, {{}}, {}};
  for (int i = y - a; i < y; ++i) out.holes[0].push_back(i);
  for (int q = 0; q < m.count(); ++q) {
    auto hs = hole_symbols(m, q);
    std::vector<char> is_hole_sym(y);
    for (int x : hs) is_hole_sym[x] = 1;
    std::vector<int> rename(y);
    int next = 0;
    for (int x = 0; x < y; ++x)
      if (!is_hole_sym[x]) rename[x] = next++;
    for (int x = 0; x < y; ++x)
      if (is_hole_sym[x]) rename[x] = next++;
    Square sq(y);
    for (int r = 0; r < y; ++r)
      for (int c = 0; c < y; ++c) {
        int x = m.squares[q].at(order[r], order[c]);
        sq.at(r, c) = x < 0 ? -1 : rename[x];
      }
    out.squares.push_back(std::move(sq));
  }
  return out;
}

GhdArray superimpose(const MolsSet& m) {
  const int n = m.order, k = m.count();
  std::vector<Label> labels;
  for (int q = 0; q < k; ++q)
    for (int x = 0; x < n; ++x) labels.push_back(FiniteLabel{x, q});
  Params p;
  p.k = k;
  GridBuilder grid(n, make_symbols(labels), p);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::vector<SymbolId> b;
      for (int q = 0; q < k; ++q) b.push_back(static_cast<SymbolId>(q * n + m.squares[q].at(r, c)));
      grid.place(r, c, Block(std::move(b)));
    }
  return grid.build();
}

std::vector<SymbolId> superimposed_group(const MolsSet& m, int square) {
  std::vector<SymbolId> out;
  for (int x = 0; x < m.order; ++x) out.push_back(static_cast<SymbolId>(square * m.order + x));
  return out;
}

TransversalDesign rtd_from_mols(const MolsSet& m) {
  const int n = m.order, t = m.count();
  TransversalDesign td{t + 1, n, {}, {}};
  for (int r = 0; r < n; ++r) {
    std::vector<int> cls;
    for (int c = 0; c < n; ++c) {
      std::vector<int> b{c};
      for (int q = 0; q < t; ++q) b.push_back((q + 1) * n + m.squares[q].at(r, c));
      cls.push_back(static_cast<int>(td.blocks.size()));
      td.blocks.push_back(std::move(b));
    }
    td.classes.push_back(std::move(cls));
  }
  return td;
}

ResolvablePbd pbd_from_rtd(const TransversalDesign& td) {
  ResolvablePbd pbd{td.k * td.n, {}, {}, {}};
  for (auto b : td.blocks) {
    std::sort(b.begin(), b.end());
    pbd.blocks.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < td.classes.size(); ++i) {
    pbd.classes.push_back(td.classes[i]);
    pbd.class_names.push_back("row" + std::to_string(i));
  }
  std::vector<int> groups;
  for (int g = 0; g < td.k; ++g) {
    std::vector<int> b(td.n);
    std::iota(b.begin(), b.end(), g * td.n);
    groups.push_back(static_cast<int>(pbd.blocks.size()));
    pbd.blocks.push_back(std::move(b));
  }
  pbd.classes.push_back(std::move(groups));
  pbd.class_names.push_back("groups");
  return pbd;
}

ResolvablePbd affine_plane(int q) {
  GaloisField f(q);
  ResolvablePbd pbd{q * q, {}, {}, {}};
  for (int m = 0; m <= q; ++m) {
    std::vector<int> cls;
    for (int b = 0; b < q; ++b) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(m < q ? x * q + f.add(f.mul(m, x), b) : b * q + x);
      std::sort(line.begin(), line.end());
      cls.push_back(static_cast<int>(pbd.blocks.size()));
      pbd.blocks.push_back(std::move(line));
    }
    pbd.classes.push_back(std::move(cls));
    pbd.class_names.push_back(m < q ? "slope" + std::to_string(m) : "vertical");
  }
  return pbd;
}

VerificationReport verify_pbd(const ResolvablePbd& pbd) {
  VerificationReport rep;
  const int v = pbd.v;
  std::vector<int> pairs(static_cast<std::size_t>(v) * v);
  for (const auto& b : pbd.blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (b[i] < 0 || b[j] >= v) fail(ErrorKind::MalformedInput, "point out of range");
        ++pairs[static_cast<std::size_t>(b[i]) * v + b[j]];
      }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      if (pairs[static_cast<std::size_t>(x) * v + y] != 1)
        rep.add(ViolationKind::PairExcess, -1, -1,
                "pair {" + std::to_string(x) + "," + std::to_string(y) + "} in " +
                    std::to_string(pairs[static_cast<std::size_t>(x) * v + y]) + " blocks");
  for (std::size_t c = 0; c < pbd.classes.size(); ++c) {
    std::vector<int> seen(v);
    for (int bi : pbd.classes[c])
      for (int x : pbd.blocks.at(bi)) ++seen[x];
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
      rep.add(ViolationKind::ParamBound, -1, -1, "class " + std::to_string(c) + " is not a partition");
  }
  return rep;
}

GhdArray ghd_mols_product(const GhdArray& g, const MolsSet& m) {
  const int k = g.params().k;
  if (m.count() != k) fail(ErrorKind::CountMismatch, "need exactly k = " + std::to_string(k) + " MOLS");
  const int n = m.order, s = g.side();
  std::vector<Label> labels;
  for (const auto& sym : g.symbols())
    for (int i = 0; i < n; ++i) labels.push_back(PlainLabel{to_string(sym.label) + ":" + std::to_string(i)});
  GridBuilder grid(n * s, make_symbols(labels), g.params());
  for (int I = 0; I < s; ++I)
    for (int J = 0; J < s; ++J) {
      const Cell& b = g.cell(I, J);
      if (!b) continue;
      if (b->size() != k) fail(ErrorKind::InvalidDesign, "cell holds a block of the wrong size");
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          std::vector<SymbolId> out;
          for (int q = 0; q < k; ++q) out.push_back(static_cast<SymbolId>((*b)[q] * n + m.squares[q].at(r, c)));
          grid.place(I * n + r, J * n + c, Block(std::move(out)));
        }
    }
  return grid.build();
}

}  // namespace ghd::latin
