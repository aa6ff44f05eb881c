#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ghd/design.hpp"

namespace ghd {

enum class ViolationKind { CellArity, RowCover, ColCover, PairExcess, ParamBound };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int row = -1;  // -1 when not tied to a row
  int col = -1;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  int count(ViolationKind kind) const;
  void add(ViolationKind kind, int row, int col, std::string detail) {
    violations.push_back({kind, row, col, std::move(detail)});
  }
  void merge(const VerificationReport& other);
  std::string summary(std::size_t max_lines = 8) const;
};

VerificationReport verify_ghd(const GhdArray& g);

// Symbols of `hole` lie in no common block; with |hole| = v - s(k-1) this is
// the star property.
VerificationReport verify_star(const GhdArray& g, const std::vector<SymbolId>& hole);
int star_hole_size(const GhdArray& g);

// Lexicographically first (by symbol id) pairwise hole of the given size.
std::optional<std::vector<SymbolId>> find_pairwise_hole(const GhdArray& g, int size);

struct Subsquare {
  std::vector<int> rows;
  std::vector<int> cols;
};

// e x e all-empty subarray; exhaustive and lexicographically first for
// e <= 3, greedy beyond that.
std::optional<Subsquare> find_empty_subsquare(const GhdArray& g, int e);
bool is_empty_subsquare(const GhdArray& g, const Subsquare& sq);

struct RowProfile {
  int filled = 0;
  int empty = 0;
  boost::rational<long long> empty_fraction;
};

RowProfile row_profile(const GhdArray& g);

// Cell (r,c) moves to (row_perm[r], col_perm[c]); symbol x becomes
// symbol_perm[x] and keeps its label.
GhdArray apply_relabeling(const GhdArray& g, const std::vector<int>& row_perm, const std::vector<int>& col_perm,
                          const std::vector<SymbolId>& symbol_perm);

}  // namespace ghd
