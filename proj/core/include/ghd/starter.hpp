#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ghd/design.hpp"
#include "ghd/verify.hpp"

namespace ghd::starter {

// A point of Z_g x {0..L-1}, or one of the fixed infinite points.
struct Point {
  bool infinite = false;
  int value = 0;  // residue, or infinite index as written
  int level = 0;

  static Point finite(int residue, int level) { return {false, residue, level}; }
  static Point inf(int index) { return {true, index, 0}; }
  bool operator==(const Point&) const = default;
};

using Triple = std::array<Point, 3>;

struct StarterBlock {
  Triple points;
  int adder = 0;
};

struct TransitiveStarterAdder {
  int n = 0;
  int x = 0;
  std::vector<StarterBlock> blocks;
  // Cycles on infinite indices for the modified development; empty means the
  // infinite points are fixed.
  std::vector<std::vector<int>> orbits;
  int inf_base = 0;  // index of the first infinite point as written

  int group_order() const { return n + x; }
  int infinite_count() const { return n - 2 * x; }
};

enum class Role { S, R, C };

struct IntransitiveStarterAdder {
  int n = 0;
  int x = 0;
  std::vector<StarterBlock> S;
  std::vector<Triple> R;
  std::vector<Triple> C;
  // Source order of the blocks, kept so a parsed file prints back unchanged.
  std::vector<Role> line_order;
};

VerificationReport validate(const TransitiveStarterAdder& sa);
VerificationReport validate(const IntransitiveStarterAdder& sa);

// GHD(n+x, 3n); throws ExpansionConflict when two blocks land in one cell.
GhdArray expand(const TransitiveStarterAdder& sa);
GhdArray expand(const IntransitiveStarterAdder& sa);

// Symbol ids used by the expansions.
SymbolId finite_id(int residue, int level, int group_order);
SymbolId infinite_id(int index, int group_order, int levels);

// The infinite points of a transitive expansion, the star hole when x = 1.
std::vector<SymbolId> infinite_symbols(const TransitiveStarterAdder& sa);
// {0, (n+2)/2} for even n with x = 2: rows and columns of an empty 2 x 2.
Subsquare translate_subsquare(const TransitiveStarterAdder& sa);

std::string format(const TransitiveStarterAdder& sa);
std::string format(const IntransitiveStarterAdder& sa);

using AnyStarter = std::variant<TransitiveStarterAdder, IntransitiveStarterAdder>;
AnyStarter parse(std::string_view text);

}  // namespace ghd::starter
