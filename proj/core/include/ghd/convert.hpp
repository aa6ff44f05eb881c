#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ghd/design.hpp"

namespace ghd {

// Row r of the array for symbol x: PA[x][r] is the column holding x in row
// r, or -1 when x is absent (only for non-designs).
struct PermutationArray {
  int length = 0;  // s
  std::vector<std::vector<int>> rows;  // one per symbol
};

PermutationArray to_permutation_array(const GhdArray& g);
// Hamming distance between two PA rows: positions that differ.
int hamming(const std::vector<int>& a, const std::vector<int>& b);
int min_distance(const PermutationArray& pa);

using Codeword = boost::dynamic_bitset<>;

// One codeword per filled cell: row indicator | column indicator | block
// indicator, length 2s + v, weight k + 2.
std::vector<Codeword> to_dcw_code(const GhdArray& g);
int min_distance(const std::vector<Codeword>& code);

// Inverses; symbols supply the labels and fix v.
GhdArray from_permutation_array(const PermutationArray& pa, std::vector<Symbol> symbols, Params params = {});
GhdArray from_dcw_code(const std::vector<Codeword>& code, int side, std::vector<Symbol> symbols, Params params = {});

// Text forms. "pa s=<s> v=<v>" then one line per symbol: label and the
// column in each row ('-' when absent). "dcw s=<s> v=<v>", a "symbols" line,
// then one bit string per codeword with bit 0 first.
std::string format_pa(const GhdArray& g);
GhdArray parse_pa(std::string_view text);
std::string format_dcw(const GhdArray& g);
GhdArray parse_dcw(std::string_view text);

}  // namespace ghd
