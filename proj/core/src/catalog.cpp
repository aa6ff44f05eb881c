#include "ghd/catalog.hpp"

#include <atomic>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "ghd/error.hpp"
#include "ghd/grid_io.hpp"

namespace ghd::catalog {

std::string_view to_string(EntryKind k) {
  switch (k) {
    case EntryKind::Transitive: return "transitive";
    case EntryKind::Intransitive: return "intransitive";
    case EntryKind::Modified: return "modified";
    case EntryKind::Grid: return "grid";
  }
  return "?";
}

const CatalogEntry* Catalog::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::at(std::string_view id) const {
  const auto* e = find(id);
  if (!e) fail(ErrorKind::MissingIngredient, "no catalog entry " + std::string(id));
  return *e;
}

int Catalog::verified_count() const {
  int n = 0;
  for (const auto& e : entries) n += e.verified();
  return n;
}

int Catalog::quarantined_count() const { return static_cast<int>(entries.size()) - verified_count(); }

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("GHD_DATA_DIR"); env && *env) return env;
  return GHD_DEFAULT_DATA_DIR;
}

namespace {

EntryKind parse_kind(const std::string& s) {
  if (s == "transitive") return EntryKind::Transitive;
  if (s == "intransitive") return EntryKind::Intransitive;
  if (s == "modified") return EntryKind::Modified;
  if (s == "grid") return EntryKind::Grid;
  fail(ErrorKind::ParseError, "unknown entry kind " + s);
}

std::set<std::string> cell_labels(const GhdArray& g, int r, int c) {
  std::set<std::string> out;
  if (const auto& cell = g.cell(r, c))
    for (SymbolId s : *cell) out.insert(to_string(g.label(s)));
  return out;
}

void check(CatalogEntry& e) {
  auto note = [&](std::string msg) { e.diagnostics.push_back(std::move(msg)); };
  try {
    if (auto* t = std::get_if<starter::TransitiveStarterAdder>(&e.payload)) {
      auto rep = starter::validate(*t);
      if (!rep.ok()) note("starter: " + rep.summary());
      e.design = starter::expand(*t);
    } else if (auto* i = std::get_if<starter::IntransitiveStarterAdder>(&e.payload)) {
      auto rep = starter::validate(*i);
      if (!rep.ok()) note("starter: " + rep.summary());
      e.design = starter::expand(*i);
    } else {
      e.design = std::get<GhdArray>(e.payload);
    }
  } catch (const Error& err) {
    note(err.what());
    return;
  }
  const GhdArray& g = *e.design;
  if (g.side() != e.expected.s || g.v() != e.expected.v)
    note("expected GHD(" + std::to_string(e.expected.s) + "," + std::to_string(e.expected.v) + "), got GHD(" +
         std::to_string(g.side()) + "," + std::to_string(g.v()) + ")");
  auto rep = verify_ghd(g);
  if (!rep.ok()) note("design: " + rep.summary());

  if (e.expected.star.value_or(false)) {
    const int size = star_hole_size(g);
    auto* t = std::get_if<starter::TransitiveStarterAdder>(&e.payload);
    if (t) {
      e.hole = starter::infinite_symbols(*t);
    } else if (auto h = find_pairwise_hole(g, size)) {
      e.hole = *h;
    }
    if (static_cast<int>(e.hole.size()) != size) {
      note("no pairwise hole of size " + std::to_string(size));
    } else {
      auto srep = verify_star(g, e.hole);
      if (!srep.ok()) note("star: " + srep.summary());
    }
  }

  if (e.expected.subsquare_e) {
    const int size = *e.expected.subsquare_e;
    auto* t = std::get_if<starter::TransitiveStarterAdder>(&e.payload);
    if (t && t->x == 2 && t->n % 2 == 0 && size == 2) {
      e.subsquare = starter::translate_subsquare(*t);
      if (!is_empty_subsquare(g, *e.subsquare)) note("cells at {0,(n+2)/2} are not empty");
    } else {
      e.subsquare = find_empty_subsquare(g, size);
      if (!e.subsquare) note("no empty " + std::to_string(size) + "x" + std::to_string(size) + " subsquare");
    }
  }
}

// Grids printed from a starter must equal its expansion.
void check_source(CatalogEntry& e, const Catalog& cat) {
  if (!e.source || !e.design) return;
  const auto* src = cat.find(*e.source);
  if (!src || !src->design) {
    e.diagnostics.push_back("source " + *e.source + " unavailable");
    return;
  }
  auto diff = differing_cells(*e.design, *src->design);
  if (diff.empty()) return;
  std::ostringstream os;
  os << diff.size() << " cells differ from the expansion of " << *e.source << ":";
  for (auto [r, c] : diff) os << " (" << r << "," << c << ")";
  e.diagnostics.push_back(os.str());
}

}  // namespace

std::vector<std::pair<int, int>> differing_cells(const GhdArray& a, const GhdArray& b) {
  if (a.side() != b.side()) fail(ErrorKind::SizeMismatch, "grids of different sides");
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < a.side(); ++r)
    for (int c = 0; c < a.side(); ++c)
      if (cell_labels(a, r, c) != cell_labels(b, r, c)) out.emplace_back(r, c);
  return out;
}

GhdArray apply_errata(const GhdArray& g, const std::vector<Erratum>& errata) {
  GridBuilder gb(g.side(), g.symbols(), g.params());
  for (int r = 0; r < g.side(); ++r)
    for (int c = 0; c < g.side(); ++c)
      if (g.cell(r, c)) gb.place(r, c, *g.cell(r, c));
  for (const auto& er : errata) {
    gb.clear(er.row, er.col);
    std::istringstream in(er.cell);
    std::vector<SymbolId> ids;
    for (std::string tok; in >> tok;) {
      auto id = g.find(parse_label(tok));
      if (!id) fail(ErrorKind::MalformedInput, "erratum names unknown symbol " + tok);
      ids.push_back(*id);
    }
    if (!ids.empty()) gb.place(er.row, er.col, Block(std::move(ids)));
  }
  return gb.build();
}

Catalog load_catalog() { return load_catalog(data_dir()); }

Catalog load_catalog(const std::filesystem::path& dir) {
  Catalog cat{dir, {}};
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::ParseError, "manifest.json: " + std::string(ex.what()));
  }
  for (const auto& j : manifest.at("entries")) {
    CatalogEntry e;
    e.id = j.at("id").get<std::string>();
    e.kind = parse_kind(j.at("kind").get<std::string>());
    e.file = dir / j.at("file").get<std::string>();
    const auto& x = j.at("expected");
    e.expected.s = x.at("s").get<int>();
    e.expected.v = x.at("v").get<int>();
    if (x.contains("star") && !x["star"].is_null()) e.expected.star = x["star"].get<bool>();
    if (x.contains("subsquare_e") && !x["subsquare_e"].is_null()) e.expected.subsquare_e = x["subsquare_e"].get<int>();
    if (j.contains("source")) e.source = j["source"].get<std::string>();
    if (j.contains("errata"))
      for (const auto& er : j["errata"])
        e.errata.push_back({er.at("row").get<int>(), er.at("col").get<int>(), er.at("cell").get<std::string>()});

    const std::string text = read_file(e.file);
    try {
      if (e.kind == EntryKind::Grid) {
        e.payload = parse_text_grid(text);
      } else {
        auto any = starter::parse(text);
        std::visit([&](auto&& sa) { e.payload = std::move(sa); }, any);
      }
    } catch (const Error& err) {
      fail(ErrorKind::ParseError, e.file.filename().string() + ": " + err.what());
    }
    cat.entries.push_back(std::move(e));
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cat.entries.size(); i = next++) check(cat.entries[i]);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& e : cat.entries) check_source(e, cat);
  for (auto& e : cat.entries) e.status = e.diagnostics.empty() ? EntryStatus::Verified : EntryStatus::Quarantined;
  return cat;
}

}  // namespace ghd::catalog
