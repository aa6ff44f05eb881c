#include "ghd/convert.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "ghd/error.hpp"
#include "ghd/verify.hpp"

namespace ghd {

namespace {

void require_design(const GhdArray& g) {
  auto rep = verify_ghd(g);
  if (!rep.ok()) fail(ErrorKind::InvalidDesign, rep.summary());
}

}  // namespace

PermutationArray to_permutation_array(const GhdArray& g) {
  require_design(g);
  PermutationArray pa;
  pa.length = g.side();
  pa.rows.assign(g.v(), std::vector<int>(g.side(), -1));
  for (int r = 0; r < g.side(); ++r)
    for (int c = 0; c < g.side(); ++c)
      if (const Cell& b = g.cell(r, c))
        for (SymbolId x : *b) pa.rows[x][r] = c;
  return pa;
}

int hamming(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

int min_distance(const PermutationArray& pa) {
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < pa.rows.size(); ++i)
    for (std::size_t j = i + 1; j < pa.rows.size(); ++j) best = std::min(best, hamming(pa.rows[i], pa.rows[j]));
  return best;
}

std::vector<Codeword> to_dcw_code(const GhdArray& g) {
  require_design(g);
  const int s = g.side();
  std::vector<Codeword> code;
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c)
      if (const Cell& b = g.cell(r, c)) {
        Codeword w(2 * s + g.v());
        w.set(r);
        w.set(s + c);
        for (SymbolId x : *b) w.set(2 * s + x);
        code.push_back(std::move(w));
      }
  return code;
}

int min_distance(const std::vector<Codeword>& code) {
  if (code.empty()) return std::numeric_limits<int>::max();
  const std::size_t len = code.front().size();
  for (const auto& w : code)
    if (w.size() != len) fail(ErrorKind::SizeMismatch, "codewords of different lengths");
  // Packed copies; XOR of dynamic_bitsets allocates per pair.
  const std::size_t words = code.front().num_blocks();
  std::vector<Codeword::block_type> packed(words * code.size());
  for (std::size_t i = 0; i < code.size(); ++i) boost::to_block_range(code[i], packed.begin() + i * words);
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto* a = packed.data() + i * words;
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      const auto* b = packed.data() + j * words;
      int d = 0;
      for (std::size_t k = 0; k < words; ++k) d += std::popcount(a[k] ^ b[k]);
      best = std::min(best, d);
    }
  }
  return best;
}

GhdArray from_permutation_array(const PermutationArray& pa, std::vector<Symbol> symbols, Params params) {
  if (pa.rows.size() != symbols.size()) fail(ErrorKind::SizeMismatch, "one permutation array row per symbol");
  const int s = pa.length;
  std::vector<std::vector<SymbolId>> cells(static_cast<std::size_t>(s) * s);
  for (std::size_t x = 0; x < pa.rows.size(); ++x) {
    if (static_cast<int>(pa.rows[x].size()) != s) fail(ErrorKind::SizeMismatch, "row of the wrong length");
    for (int r = 0; r < s; ++r) {
      int c = pa.rows[x][r];
      if (c < -1 || c >= s) fail(ErrorKind::MalformedInput, "column out of range");
      if (c >= 0) cells[static_cast<std::size_t>(r) * s + c].push_back(static_cast<SymbolId>(x));
    }
  }
  GridBuilder gb(s, std::move(symbols), params);
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c)
      if (auto& m = cells[static_cast<std::size_t>(r) * s + c]; !m.empty()) gb.place(r, c, Block(m));
  return gb.build();
}

GhdArray from_dcw_code(const std::vector<Codeword>& code, int side, std::vector<Symbol> symbols, Params params) {
  const int v = static_cast<int>(symbols.size());
  GridBuilder gb(side, std::move(symbols), params);
  for (const auto& w : code) {
    if (static_cast<int>(w.size()) != 2 * side + v) fail(ErrorKind::SizeMismatch, "codeword of the wrong length");
    int r = -1, c = -1;
    std::vector<SymbolId> members;
    for (std::size_t i = w.find_first(); i != Codeword::npos; i = w.find_next(i)) {
      const int b = static_cast<int>(i);
      if (b < side) {
        if (r >= 0) fail(ErrorKind::MalformedInput, "codeword names two rows");
        r = b;
      } else if (b < 2 * side) {
        if (c >= 0) fail(ErrorKind::MalformedInput, "codeword names two columns");
        c = b - side;
      } else {
        members.push_back(static_cast<SymbolId>(b - 2 * side));
      }
    }
    if (r < 0 || c < 0) fail(ErrorKind::MalformedInput, "codeword without a row or a column");
    gb.place(r, c, Block(std::move(members)));
  }
  return gb.build();
}

namespace {

std::pair<int, int> read_header(std::istream& in, const std::string& tag) {
  std::string word, sv, vv;
  if (!(in >> word >> sv >> vv) || word != tag || sv.rfind("s=", 0) != 0 || vv.rfind("v=", 0) != 0)
    fail(ErrorKind::ParseError, "expected header \"" + tag + " s=<s> v=<v>\"");
  try {
    return {std::stoi(sv.substr(2)), std::stoi(vv.substr(2))};
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad number in header");
  }
}

}  // namespace

std::string format_pa(const GhdArray& g) {
  auto pa = to_permutation_array(g);
  std::ostringstream os;
  os << "pa s=" << g.side() << " v=" << g.v() << '\n';
  for (int x = 0; x < g.v(); ++x) {
    os << to_string(g.label(static_cast<SymbolId>(x)));
    for (int c : pa.rows[x]) {
      os << ' ';
      if (c < 0) os << '-';
      else os << c;
    }
    os << '\n';
  }
  return os.str();
}

GhdArray parse_pa(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto [s, v] = read_header(in, "pa");
  PermutationArray pa{s, {}};
  std::vector<Label> labels;
  for (int x = 0; x < v; ++x) {
    std::string label;
    if (!(in >> label)) fail(ErrorKind::ParseError, "missing row for symbol " + std::to_string(x));
    labels.push_back(parse_label(label));
    std::vector<int> row;
    for (int r = 0; r < s; ++r) {
      std::string tok;
      if (!(in >> tok)) fail(ErrorKind::ParseError, "short row for " + label);
      if (tok == "-") {
        row.push_back(-1);
        continue;
      }
      try {
        row.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad column " + tok);
      }
    }
    pa.rows.push_back(std::move(row));
  }
  return from_permutation_array(pa, make_symbols(labels));
}

std::string format_dcw(const GhdArray& g) {
  std::ostringstream os;
  os << "dcw s=" << g.side() << " v=" << g.v() << "\nsymbols";
  for (const auto& sym : g.symbols()) os << ' ' << to_string(sym.label);
  os << '\n';
  for (const auto& w : to_dcw_code(g)) {
    for (std::size_t i = 0; i < w.size(); ++i) os << (w.test(i) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

GhdArray parse_dcw(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto [s, v] = read_header(in, "dcw");
  std::string word;
  if (!(in >> word) || word != "symbols") fail(ErrorKind::ParseError, "expected a symbols line");
  std::vector<Label> labels;
  for (int x = 0; x < v; ++x) {
    if (!(in >> word)) fail(ErrorKind::ParseError, "missing symbol label");
    labels.push_back(parse_label(word));
  }
  std::vector<Codeword> code;
  while (in >> word) {
    if (static_cast<int>(word.size()) != 2 * s + v) fail(ErrorKind::ParseError, "codeword of the wrong length");
    Codeword w(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] != '0' && word[i] != '1') fail(ErrorKind::ParseError, "codewords are bit strings");
      if (word[i] == '1') w.set(i);
    }
    code.push_back(std::move(w));
  }
  return from_dcw_code(code, s, make_symbols(labels));
}

}  // namespace ghd
