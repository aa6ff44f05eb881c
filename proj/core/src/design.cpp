#include "ghd/design.hpp"

#include <algorithm>
#include <cctype>

#include "ghd/error.hpp"

namespace ghd {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string to_string(const Label& label) {
  struct V {
    std::string operator()(const FiniteLabel& f) const {
      return std::to_string(f.residue) + "_" + std::to_string(f.copy);
    }
    std::string operator()(const InfiniteLabel& i) const { return "inf" + std::to_string(i.index); }
    std::string operator()(const PlainLabel& p) const { return p.name; }
  };
  return std::visit(V{}, label);
}

Label parse_label(std::string_view token) {
  if (token.empty()) fail(ErrorKind::ParseError, "empty symbol token");
  if (token.size() > 3 && token.substr(0, 3) == "inf" && all_digits(token.substr(3)))
    return InfiniteLabel{std::stoi(std::string(token.substr(3)))};
  auto us = token.find('_');
  if (us != std::string_view::npos && all_digits(token.substr(0, us)) && all_digits(token.substr(us + 1)))
    return FiniteLabel{std::stoi(std::string(token.substr(0, us))), std::stoi(std::string(token.substr(us + 1)))};
  return PlainLabel{std::string(token)};
}

std::vector<Symbol> make_symbols(const std::vector<Label>& labels) {
  std::vector<Symbol> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out.push_back({static_cast<SymbolId>(i), labels[i]});
  return out;
}

Block::Block(std::vector<SymbolId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    fail(ErrorKind::MalformedInput, "block repeats a symbol");
}

bool Block::contains(SymbolId s) const { return std::binary_search(members_.begin(), members_.end(), s); }

GhdArray::GhdArray(int side, std::vector<Symbol> symbols, std::vector<Cell> cells, Params params)
    : side_(side), symbols_(std::move(symbols)), cells_(std::move(cells)), params_(params) {
  if (side_ < 0) fail(ErrorKind::MalformedInput, "negative side");
  if (cells_.size() != static_cast<std::size_t>(side_) * side_)
    fail(ErrorKind::MalformedInput, "cell count does not match side " + std::to_string(side_));
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].id != i) fail(ErrorKind::MalformedInput, "symbol ids must be 0..v-1 in order");
    if (!by_label_.emplace(symbols_[i].label, symbols_[i].id).second)
      fail(ErrorKind::MalformedInput, "duplicate label " + to_string(symbols_[i].label));
  }
  for (const auto& c : cells_)
    if (c)
      for (SymbolId s : *c)
        if (s >= symbols_.size()) fail(ErrorKind::MalformedInput, "unknown symbol id " + std::to_string(s));
}

std::optional<SymbolId> GhdArray::find(const Label& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

int GhdArray::filled_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](const Cell& c) { return c.has_value(); }));
}

bool GhdArray::labels_equal(const GhdArray& o) const {
  if (symbols_.size() != o.symbols_.size()) return false;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].label != o.symbols_[i].label) return false;
  return true;
}

bool same_by_label(const GhdArray& a, const GhdArray& b) {
  if (a.side() != b.side() || a.v() != b.v()) return false;
  std::vector<SymbolId> map(a.v());
  for (const auto& s : a.symbols()) {
    auto j = b.find(s.label);
    if (!j) return false;
    map[s.id] = *j;
  }
  for (int r = 0; r < a.side(); ++r)
    for (int c = 0; c < a.side(); ++c) {
      const Cell& x = a.cell(r, c);
      const Cell& y = b.cell(r, c);
      if (x.has_value() != y.has_value()) return false;
      if (!x) continue;
      std::vector<SymbolId> m;
      for (SymbolId s : *x) m.push_back(map[s]);
      if (Block(m) != *y) return false;
    }
  return true;
}

GridBuilder::GridBuilder(int side, std::vector<Symbol> symbols, Params params)
    : side_(side), symbols_(std::move(symbols)), cells_(static_cast<std::size_t>(side) * side), params_(params) {}

void GridBuilder::place(int r, int c, Block b) {
  if (r < 0 || c < 0 || r >= side_ || c >= side_)
    fail(ErrorKind::SizeMismatch, "cell (" + std::to_string(r) + "," + std::to_string(c) + ") outside grid");
  auto& cell = cells_[static_cast<std::size_t>(r) * side_ + c];
  if (cell) fail(ErrorKind::ExpansionConflict, "cell (" + std::to_string(r) + "," + std::to_string(c) + ") filled twice");
  cell = std::move(b);
}

void GridBuilder::clear(int r, int c) { cells_[static_cast<std::size_t>(r) * side_ + c].reset(); }

GhdArray GridBuilder::build() const { return GhdArray(side_, symbols_, cells_, params_); }

}  // namespace ghd
