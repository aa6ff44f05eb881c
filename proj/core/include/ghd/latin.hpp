#pragma once

#include <string>
#include <vector>

#include "ghd/design.hpp"
#include "ghd/verify.hpp"

namespace ghd::latin {

// Row-major square; -1 marks an empty cell.
struct Square {
  int order = 0;
  std::vector<int> cells;

  Square() = default;
  explicit Square(int n) : order(n), cells(static_cast<std::size_t>(n) * n, -1) {}
  int at(int r, int c) const { return cells[static_cast<std::size_t>(r) * order + c]; }
  int& at(int r, int c) { return cells[static_cast<std::size_t>(r) * order + c]; }
  bool operator==(const Square&) const = default;
};

struct MolsSet {
  int order = 0;
  std::vector<Square> squares;
  int count() const { return static_cast<int>(squares.size()); }
};

// Incomplete MOLS: holes are disjoint index sets H with H x H empty. With one
// hole of size a this is an IMOLS(order, a).
struct ImolsSet {
  int order = 0;
  std::vector<std::vector<int>> holes;
  std::vector<Square> squares;
  int count() const { return static_cast<int>(squares.size()); }
  int hole_size() const { return holes.empty() ? 0 : static_cast<int>(holes.front().size()); }
};

// L_a(x, y) = a x + y over GF(q) for the first t nonzero elements a.
MolsSet mols_from_field(int q, int t);
MolsSet mols_product(const MolsSet& a, const MolsSet& b);

VerificationReport verify_mols(const MolsSet& m);
VerificationReport verify_imols(const ImolsSet& m);

ImolsSet as_imols(const MolsSet& m);
// Single hole moved to the last rows and columns, hole symbols of every
// square renamed to the last symbols.
ImolsSet normalize_hole(const ImolsSet& m);
std::vector<int> hole_symbols(const ImolsSet& m, int square, int hole = 0);

// GHD(n, kn) from k MOLS(n): cell (r,c) holds {(L_q(r,c), q)}. Symbol of
// square q with value x has id q*n + x and label x_q.
GhdArray superimpose(const MolsSet& m);
std::vector<SymbolId> superimposed_group(const MolsSet& m, int square);

// RTD(t+1, n) from t MOLS(n). Point (g, x) has id g*n + x; group 0 holds the
// columns, group q+1 the symbols of square q. Blocks of row r form class r.
struct TransversalDesign {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<int>> classes;  // block indices
};

TransversalDesign rtd_from_mols(const MolsSet& m);

struct ResolvablePbd {
  int v = 0;
  std::vector<std::vector<int>> blocks;   // sorted point lists
  std::vector<std::vector<int>> classes;  // block indices
  std::vector<std::string> class_names;
};

// The RTD classes followed by a class made of the groups.
ResolvablePbd pbd_from_rtd(const TransversalDesign& td);
// AG(2, q): lines y = m x + b (one class per slope m) then the verticals.
ResolvablePbd affine_plane(int q);
// Every pair of points in exactly one block; every class a partition.
VerificationReport verify_pbd(const ResolvablePbd& pbd);

// GHD(ns, nv) from a GHD(s, v) and k MOLS(n): each filled cell becomes an
// n x n array built from the superimposed squares over {x, y, z} x [n].
GhdArray ghd_mols_product(const GhdArray& g, const MolsSet& m);

}  // namespace ghd::latin
