#include "ghd/latin_io.hpp"

#include "ghd/error.hpp"

namespace ghd::latin {

nlohmann::json to_json(const ImolsSet& m) {
  nlohmann::json j;
  j["order"] = m.order;
  j["count"] = m.count();
  if (m.holes.size() <= 1)
    j["hole"] = m.holes.empty() ? std::vector<int>{} : m.holes.front();
  else
    j["holes"] = m.holes;
  auto& squares = j["squares"] = nlohmann::json::array();
  for (const auto& sq : m.squares) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < sq.order; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < sq.order; ++c) {
        if (sq.at(r, c) < 0)
          row.push_back(nullptr);
        else
          row.push_back(sq.at(r, c));
      }
      rows.push_back(std::move(row));
    }
    squares.push_back(std::move(rows));
  }
  return j;
}

nlohmann::json to_json(const MolsSet& m) { return to_json(as_imols(m)); }

ImolsSet imols_from_json(const nlohmann::json& j) {
  try {
    ImolsSet m;
    m.order = j.at("order").get<int>();
    if (j.contains("holes")) {
      m.holes = j["holes"].get<std::vector<std::vector<int>>>();
    } else if (j.contains("hole")) {
      auto h = j["hole"].get<std::vector<int>>();
      if (!h.empty()) m.holes.push_back(std::move(h));
    }
    for (const auto& rows : j.at("squares")) {
      Square sq(m.order);
      if (static_cast<int>(rows.size()) != m.order) fail(ErrorKind::MalformedInput, "square has the wrong row count");
      for (int r = 0; r < m.order; ++r) {
        if (static_cast<int>(rows[r].size()) != m.order) fail(ErrorKind::MalformedInput, "row has the wrong length");
        for (int c = 0; c < m.order; ++c) sq.at(r, c) = rows[r][c].is_null() ? -1 : rows[r][c].get<int>();
      }
      m.squares.push_back(std::move(sq));
    }
    if (j.contains("count") && j["count"].get<int>() != m.count())
      fail(ErrorKind::MalformedInput, "count does not match the squares");
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

nlohmann::json to_json(const ResolvablePbd& pbd) {
  nlohmann::json j;
  j["v"] = pbd.v;
  j["blocks"] = pbd.blocks;
  j["classes"] = pbd.classes;
  j["class_names"] = pbd.class_names;
  return j;
}

}  // namespace ghd::latin
