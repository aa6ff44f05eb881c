#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ghd {

using SymbolId = std::uint32_t;

// r_c: residue r of a group, copy (subscript) c.
struct FiniteLabel {
  int residue = 0;
  int copy = 0;
  auto operator<=>(const FiniteLabel&) const = default;
};

struct InfiniteLabel {
  int index = 0;
  auto operator<=>(const InfiniteLabel&) const = default;
};

struct PlainLabel {
  std::string name;
  auto operator<=>(const PlainLabel&) const = default;
};

using Label = std::variant<FiniteLabel, InfiniteLabel, PlainLabel>;

std::string to_string(const Label& label);
// "3_1" -> Finite, "inf4" -> Infinite, anything else -> Plain.
Label parse_label(std::string_view token);

struct Symbol {
  SymbolId id = 0;
  Label label;
};

std::vector<Symbol> make_symbols(const std::vector<Label>& labels);

// Sorted, duplicate-free set of symbol ids.
class Block {
 public:
  Block() = default;
  explicit Block(std::vector<SymbolId> members);

  int size() const noexcept { return static_cast<int>(members_.size()); }
  const std::vector<SymbolId>& members() const noexcept { return members_; }
  SymbolId operator[](int i) const { return members_[i]; }
  bool contains(SymbolId s) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool operator==(const Block&) const = default;
  auto operator<=>(const Block&) const = default;

 private:
  std::vector<SymbolId> members_;
};

using Cell = std::optional<Block>;

struct Params {
  int t = 2;
  int k = 3;
  int lambda = 1;
  bool operator==(const Params&) const = default;
};

// An s x s array whose cells are empty or hold a block over a symbol set.
// Construction checks shape and symbol ids only; design axioms are the
// verifier's job.
class GhdArray {
 public:
  GhdArray() = default;
  GhdArray(int side, std::vector<Symbol> symbols, std::vector<Cell> cells, Params params = {});

  int side() const noexcept { return side_; }
  int v() const noexcept { return static_cast<int>(symbols_.size()); }
  const Params& params() const noexcept { return params_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Label& label(SymbolId id) const { return symbols_.at(id).label; }
  std::optional<SymbolId> find(const Label& label) const;

  const Cell& cell(int r, int c) const { return cells_[static_cast<std::size_t>(r) * side_ + c]; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  int filled_count() const;

  bool operator==(const GhdArray& o) const {
    return side_ == o.side_ && params_ == o.params_ && cells_ == o.cells_ && labels_equal(o);
  }

 private:
  bool labels_equal(const GhdArray& o) const;

  int side_ = 0;
  std::vector<Symbol> symbols_;
  std::vector<Cell> cells_;
  Params params_;
  std::map<Label, SymbolId> by_label_;
};

// Cell-wise comparison through labels; symbol ids may differ.
bool same_by_label(const GhdArray& a, const GhdArray& b);

// Mutable staging area used by the constructions.
class GridBuilder {
 public:
  GridBuilder(int side, std::vector<Symbol> symbols, Params params = {});

  int side() const noexcept { return side_; }
  // Throws ExpansionConflict if the cell is already filled.
  void place(int r, int c, Block b);
  void clear(int r, int c);
  const Cell& at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * side_ + c]; }
  GhdArray build() const;

 private:
  int side_;
  std::vector<Symbol> symbols_;
  std::vector<Cell> cells_;
  Params params_;
};

}  // namespace ghd
