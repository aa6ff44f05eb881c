#include "ghd/grid_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ghd/error.hpp"

namespace ghd {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GhdArray parse_text_grid(std::string_view text, Params params) {
  std::vector<std::vector<std::vector<std::string>>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (!t.empty() && t.front() == '#') continue;
    if (t.empty() && line.find('|') == std::string::npos) continue;
    std::vector<std::vector<std::string>> row;
    std::string_view rest = line;
    while (true) {
      auto bar = rest.find('|');
      std::istringstream cell{std::string(rest.substr(0, bar))};
      std::vector<std::string> toks;
      for (std::string tok; cell >> tok;) toks.push_back(tok);
      row.push_back(std::move(toks));
      if (bar == std::string_view::npos) break;
      rest = rest.substr(bar + 1);
    }
    rows.push_back(std::move(row));
  }
  const int s = static_cast<int>(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (static_cast<int>(rows[r].size()) != s)
      fail(ErrorKind::ParseError, "row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                      " cells, expected " + std::to_string(s));
  std::map<std::string, SymbolId> ids;
  std::vector<Label> labels;
  std::vector<Cell> cells;
  for (const auto& row : rows)
    for (const auto& toks : row) {
      if (toks.empty()) {
        cells.emplace_back();
        continue;
      }
      std::vector<SymbolId> m;
      for (const auto& tok : toks) {
        auto [it, fresh] = ids.emplace(tok, static_cast<SymbolId>(labels.size()));
        if (fresh) labels.push_back(parse_label(tok));
        m.push_back(it->second);
      }
      cells.emplace_back(Block(std::move(m)));
    }
  return GhdArray(s, make_symbols(labels), std::move(cells), params);
}

std::string format_text_grid(const GhdArray& g) {
  std::string out;
  for (int r = 0; r < g.side(); ++r) {
    for (int c = 0; c < g.side(); ++c) {
      if (c) out += " | ";
      if (const Cell& b = g.cell(r, c)) {
        bool first = true;
        for (SymbolId x : *b) {
          if (!first) out += ' ';
          out += to_string(g.label(x));
          first = false;
        }
      }
    }
    out += '\n';
  }
  return out;
}

nlohmann::json grid_to_json(const GhdArray& g) {
  nlohmann::json j;
  j["s"] = g.side();
  j["v"] = g.v();
  j["k"] = g.params().k;
  j["lambda"] = g.params().lambda;
  auto& syms = j["symbols"] = nlohmann::json::array();
  for (const auto& s : g.symbols()) syms.push_back(to_string(s.label));
  auto& cells = j["cells"] = nlohmann::json::array();
  for (int r = 0; r < g.side(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < g.side(); ++c) {
      if (const Cell& b = g.cell(r, c))
        row.push_back(b->members());
      else
        row.push_back(nullptr);
    }
    cells.push_back(std::move(row));
  }
  return j;
}

GhdArray grid_from_json(const nlohmann::json& j) {
  try {
    const int s = j.at("s").get<int>();
    Params p;
    p.k = j.value("k", 3);
    p.lambda = j.value("lambda", 1);
    std::vector<Label> labels;
    for (const auto& l : j.at("symbols")) labels.push_back(parse_label(l.get<std::string>()));
    if (j.contains("v") && j["v"].get<int>() != static_cast<int>(labels.size()))
      fail(ErrorKind::MalformedInput, "v does not match the symbol list");
    const auto& rows = j.at("cells");
    if (static_cast<int>(rows.size()) != s) fail(ErrorKind::MalformedInput, "cells must have s rows");
    std::vector<Cell> cells;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != s) fail(ErrorKind::MalformedInput, "row length differs from s");
      for (const auto& c : row) {
        if (c.is_null())
          cells.emplace_back();
        else
          cells.emplace_back(Block(c.get<std::vector<SymbolId>>()));
      }
    }
    return GhdArray(s, make_symbols(labels), std::move(cells), p);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::MalformedInput, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::MalformedInput, "cannot write " + path.string());
  out << content;
}

GhdArray load_grid(const std::filesystem::path& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return grid_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorKind::ParseError, e.what());
    }
  }
  return parse_text_grid(text);
}

}  // namespace ghd
