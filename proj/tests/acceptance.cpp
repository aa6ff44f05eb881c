// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all pass.
// Usage: acceptance [--fresh-cache DIR]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ghd/catalog.hpp"
#include "ghd/composite.hpp"
#include "ghd/convert.hpp"
#include "ghd/frame.hpp"
#include "ghd/grid_io.hpp"
#include "ghd/latin.hpp"
#include "ghd/search.hpp"
#include "ghd/starter.hpp"
#include "ghd/verify.hpp"
#include "oracle.hpp"

using namespace ghd;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void info(std::string s) { notes.push_back(std::move(s)); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void run(int number, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.notes.push_back(std::string("exception: ") + e.what());
  }
  const double t = seconds_since(t0);
  if (limit > 0 && t >= limit) out.require(false, "took longer than the time limit");
  if (!out.pass) ++failures;
  std::cout << "criterion " << std::setw(2) << number << ": " << (out.pass ? "PASS" : "FAIL") << "  " << title << "  ("
            << std::fixed << std::setprecision(2) << t << " s";
  if (limit > 0) std::cout << ", limit " << std::setprecision(0) << limit << " s";
  std::cout << ")\n";
  for (const auto& n : out.notes) std::cout << "    " << n << '\n';
  std::cout.flush();
}

const catalog::Catalog& shipped() {
  static const catalog::Catalog cat = catalog::load_catalog(oracle::source_dir() / "data");
  return cat;
}

std::vector<const catalog::CatalogEntry*> entries_with_prefix(const std::string& prefix) {
  std::vector<const catalog::CatalogEntry*> out;
  for (const auto& e : shipped().entries)
    if (e.id.rfind(prefix, 0) == 0) out.push_back(&e);
  return out;
}

GhdArray expand_payload(const catalog::Payload& p) {
  if (auto* t = std::get_if<starter::TransitiveStarterAdder>(&p)) return starter::expand(*t);
  if (auto* i = std::get_if<starter::IntransitiveStarterAdder>(&p)) return starter::expand(*i);
  return std::get<GhdArray>(p);
}

bool verified(const GhdArray& g) { return verify_ghd(g).ok() && oracle::is_ghd(g); }

bool star_with(const GhdArray& g, const std::vector<SymbolId>& hole) {
  return static_cast<int>(hole.size()) == star_hole_size(g) && verify_star(g, hole).ok() &&
         oracle::pairwise_hole(g, hole);
}

// appA entries (offset 1) or appB entries (offset 2).
void sweep(Outcome& out, const std::string& prefix, int offset, std::size_t expected_count, bool check_subsquare) {
  auto list = entries_with_prefix(prefix);
  out.require(list.size() == expected_count, std::to_string(expected_count) + " entries (found " +
                                                 std::to_string(list.size()) + ")");
  int ok = 0, stars = 0, subs = 0;
  for (const auto* e : list) {
    auto g = expand_payload(e->payload);
    const auto* t = std::get_if<starter::TransitiveStarterAdder>(&e->payload);
    const int n = t ? t->n : std::get<starter::IntransitiveStarterAdder>(e->payload).n;
    bool good = g.side() == n + offset && g.v() == 3 * n && verified(g);
    out.require(good, e->id + " is a GHD(" + std::to_string(n + offset) + "," + std::to_string(3 * n) + ")");
    ok += good;
    if (t) {
      auto hole = starter::infinite_symbols(*t);
      bool star = static_cast<int>(hole.size()) == n - 2 * offset && star_with(g, hole);
      out.require(star, e->id + " star hole of size " + std::to_string(n - 2 * offset));
      stars += star;
      if (check_subsquare && n % 2 == 0) {
        std::vector<int> idx{0, (n + 2) / 2};
        bool empty = oracle::empty_subarray(g, idx, idx);
        auto sq = starter::translate_subsquare(*t);
        empty = empty && sq.rows == idx && sq.cols == idx;
        out.require(empty, e->id + " empty cells at {0," + std::to_string((n + 2) / 2) + "}");
        subs += empty;
      }
    }
  }
  std::ostringstream os;
  os << ok << "/" << list.size() << " verified, " << stars << " star holes";
  if (check_subsquare) os << ", " << subs << " sub-GHD(2,0)";
  out.info(os.str());
}

const GhdArray& ex11() {
  static const GhdArray g = load_grid(oracle::data_path("ex1_1.grid"));
  return g;
}

GhdArray appendix_b_seven() {
  return expand_payload(shipped().at("appB/i/n7").payload);
}

std::optional<latin::ImolsSet> imols_supplier(int y, int a) {
  auto r = search::search_imols(y, a);
  if (r.status != search::Status::Found) return std::nullopt;
  return r.witness;
}

void frame_pipeline(Outcome& out) {
  auto mols = latin::mols_from_field(5, 4);
  out.require(latin::verify_mols(mols).ok(), "4 MOLS(5)");
  for (auto [y, a] : {std::pair{8, 1}, {9, 2}}) {
    auto r = search::search_imols(y, a);
    out.require(r.status == search::Status::Found && oracle::is_imols(*r.witness),
                "IMOLS(" + std::to_string(y) + "," + std::to_string(a) + ") found");
  }
  auto built = frames::frame_from_mols_imols(7, 5, {2, 2, 2, 1}, mols, imols_supplier);
  const auto& f = built.frame;
  out.require(f.spans == std::vector<int>{7, 7, 7, 7, 7, 7}, "frame spans 7^5 7^1");
  out.require(frames::verify_frame(f).ok(), "frame passes verify_frame");
  auto ing = appendix_b_seven();
  auto sq = find_empty_subsquare(ing, 2);
  out.require(sq.has_value(), "GHD(9,21) has an empty 2x2");
  if (!sq) return;
  std::vector<frames::Ingredient> ings(6, frames::Ingredient{ing, sq->rows, sq->cols, {}});
  auto g = frames::basic_frame_construction(f, 2, 0, ings);
  out.require(g.side() == 44 && g.v() == 126 && verified(g), "verified GHD(44,126)");
}

void composition_pipeline(Outcome& out) {
  auto mols = latin::mols_from_field(8, 7);
  out.require(latin::verify_mols(mols).ok(), "7 MOLS(8)");
  auto rtd = latin::rtd_from_mols(mols);
  out.require(rtd.k == 8 && rtd.n == 8 && rtd.classes.size() == 8, "RTD(8,8)");
  auto pbd = latin::pbd_from_rtd(rtd);
  bool sizes = std::all_of(pbd.blocks.begin(), pbd.blocks.end(), [](const auto& b) { return b.size() == 8; });
  out.require(pbd.v == 64 && sizes && pbd.classes.size() == 9 && latin::verify_pbd(pbd).ok() &&
                  oracle::pair_coverage_exact(pbd.v, pbd.blocks),
              "PBD(64,{8},1) with 9 classes");
  auto mols8 = composite::mols_star(8);
  out.require(mols8.base.v() == 24, "normalized GHD*(8,24)");
  auto hole = find_pairwise_hole(ex11(), 2);
  out.require(hole.has_value(), "ex1.1 hole");
  if (!hole) return;
  auto ex = composite::normalize_star(ex11(), *hole, (*hole)[0]);
  composite::StarLibrary lib;
  lib.add(mols8);
  lib.add(ex);
  auto d = composite::stinson_compose(pbd, {7, 7, 7, 7, 7, 7, 7, 1, 7}, lib.supplier());
  out.require(d.design.side() == 64 && d.design.v() == 186 && verified(d.design), "verified GHD(64,186)");
  out.require(d.hole.size() == 58 && star_with(d.design, d.hole), "pairwise hole of size 58");
}

bool pa_properties(const GhdArray& g) {
  auto pa = to_permutation_array(g);
  const int s = g.side();
  if (pa.length != s || static_cast<int>(pa.rows.size()) != g.v()) return false;
  for (const auto& row : pa.rows) {
    std::vector<int> sorted(row);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < s; ++i)
      if (sorted[i] != i) return false;
  }
  for (std::size_t a = 0; a < pa.rows.size(); ++a)
    for (std::size_t b = a + 1; b < pa.rows.size(); ++b) {
      int agree = 0;
      for (int i = 0; i < s; ++i) agree += pa.rows[a][i] == pa.rows[b][i];
      if (agree > 1) return false;
    }
  const int k = g.params().k;
  for (int i = 0; i < s; ++i) {
    std::vector<int> count(s, 0);
    for (const auto& row : pa.rows) ++count[row[i]];
    for (int c : count)
      if (c != 0 && c != k) return false;
  }
  return true;
}

void converters(Outcome& out) {
  int designs = 0, pa_ok = 0, dcw_ok = 0, worst = 1 << 30;
  for (const auto& e : shipped().entries) {
    if (!e.verified()) continue;
    ++designs;
    const auto& g = *e.design;
    bool pa = pa_properties(g);
    out.require(pa, e.id + " permutation array");
    pa_ok += pa;
    auto code = to_dcw_code(g);
    const int d = min_distance(code);
    bool dcw = code.size() <= 1 || d >= 2 * g.params().k + 2;
    out.require(dcw, e.id + " code distance " + std::to_string(d));
    dcw_ok += dcw;
    if (code.size() > 1) worst = std::min(worst, d);
  }
  out.info(std::to_string(designs) + " designs: " + std::to_string(pa_ok) + " PA ok, " + std::to_string(dcw_ok) +
           " codes ok, least distance " + std::to_string(worst));
}

GhdArray with_cell(const GhdArray& g, int r, int c, Cell cell) {
  std::vector<Cell> cells = g.cells();
  cells[static_cast<std::size_t>(r) * g.side() + c] = std::move(cell);
  return GhdArray(g.side(), g.symbols(), std::move(cells), g.params());
}

void properties(Outcome& out) {
  std::mt19937 rng(20261014);
  long long mutations = 0, rejected = 0, relabelings = 0, preserved = 0;
  for (const auto& e : shipped().entries) {
    if (!e.verified()) continue;
    const auto& g = *e.design;
    const int s = g.side(), v = g.v();
    for (int trial = 0; trial < 1000; ++trial) {
      const int r = static_cast<int>(rng() % s), c = static_cast<int>(rng() % s);
      Cell cell = g.cell(r, c);
      if (cell && rng() % 3 == 0) {
        cell.reset();
      } else {
        std::vector<SymbolId> m = cell ? cell->members() : std::vector<SymbolId>{0, 1, 2};
        do {
          m[rng() % 3] = static_cast<SymbolId>(rng() % v);
        } while (std::set<SymbolId>(m.begin(), m.end()).size() < 3 || (cell && Block(m) == *cell));
        cell = Block(m);
      }
      ++mutations;
      rejected += !verify_ghd(with_cell(g, r, c, cell)).ok();
    }
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> rows(s), cols(s);
      std::vector<SymbolId> sym(v);
      std::iota(rows.begin(), rows.end(), 0);
      std::iota(cols.begin(), cols.end(), 0);
      std::iota(sym.begin(), sym.end(), 0);
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      std::shuffle(sym.begin(), sym.end(), rng);
      ++relabelings;
      preserved += verify_ghd(apply_relabeling(g, rows, cols, sym)).ok();
    }
  }
  out.require(rejected == mutations, "every mutation rejected");
  out.require(preserved == relabelings, "every relabeling verifies");
  out.info(std::to_string(rejected) + "/" + std::to_string(mutations) + " mutations rejected, " +
           std::to_string(preserved) + "/" + std::to_string(relabelings) + " relabelings verified");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--fresh-cache" && i + 1 < argc) {
      fs::path dir = argv[++i];
      std::error_code ec;
      fs::remove_all(dir, ec);
      fs::create_directories(dir);
      ::setenv("GHD_CACHE_DIR", dir.c_str(), 1);
    } else {
      std::cerr << "usage: acceptance [--fresh-cache DIR]\n";
      return 2;
    }
  }

  shipped();
  std::cout << "catalog: " << shipped().entries.size() << " entries, " << shipped().verified_count() << " verified, "
            << shipped().quarantined_count() << " quarantined\n";

  run(1, "appA sweep", 5, [](Outcome& out) { sweep(out, "appA/", 1, 16, false); });
  run(2, "appB sweep", 5, [](Outcome& out) { sweep(out, "appB/", 2, 31, true); });

  run(3, "printed grids", 1, [](Outcome& out) {
    const auto& printed31 = std::get<GhdArray>(shipped().at("ex3.1").payload);
    auto n8 = expand_payload(shipped().at("appB/t/n8").payload);
    auto diff = catalog::differing_cells(n8, printed31);
    out.require(diff.empty(), "ex3.1 equals the n=8 expansion (" + std::to_string(diff.size()) +
                                  " cells differ)");
    if (!diff.empty()) {
      auto fixed = catalog::apply_errata(printed31, shipped().at("ex3.1").errata);
      out.info("with the " + std::to_string(shipped().at("ex3.1").errata.size()) + " recorded errata applied the grid " +
               (catalog::differing_cells(n8, fixed).empty() ? "equals" : "still differs from") + " the expansion");
    }
    const auto& printed32 = std::get<GhdArray>(shipped().at("ex3.2").payload);
    auto n7 = appendix_b_seven();
    out.require(n7.side() == printed32.side() && catalog::differing_cells(n7, printed32).empty(),
                "ex3.2 equals the n=7 expansion");
    const auto& g = ex11();
    out.require(g.side() == 8 && g.v() == 18 && verified(g), "ex1.1 is a GHD(8,18)");
    auto hole = find_pairwise_hole(g, 2);
    out.require(hole && star_with(g, *hole), "ex1.1 pairwise hole of size 2");
    auto sq = find_empty_subsquare(g, 2);
    out.require(sq && oracle::empty_subarray(g, sq->rows, sq->cols), "ex1.1 empty 2x2");
  });

  run(4, "modified development", 2, [](Outcome& out) {
    struct Want {
      const char* id;
      int s, v;
    };
    for (auto w : {Want{"lemma4.4/n37", 38, 111}, Want{"lemma4.5/n24", 25, 72}, Want{"lemma4.5/n34", 35, 102}}) {
      auto g = expand_payload(shipped().at(w.id).payload);
      out.require(g.side() == w.s && g.v() == w.v && verified(g),
                  std::string(w.id) + " is a GHD(" + std::to_string(w.s) + "," + std::to_string(w.v) + ")");
    }
  });

  run(5, "frame pipeline", 60, [](Outcome& out) {
    frame_pipeline(out);
    auto t0 = Clock::now();
    Outcome again;
    frame_pipeline(again);
    const double t = seconds_since(t0);
    out.require(again.pass && t < 2, "cached rerun under 2 s");
    std::ostringstream os;
    os << "cached rerun " << std::fixed << std::setprecision(2) << t << " s";
    out.info(os.str());
  });
  run(6, "composition pipeline", 10, composition_pipeline);

  run(7, "product", 2, [](Outcome& out) {
    auto g = latin::ghd_mols_product(ex11(), latin::mols_from_field(4, 3));
    out.require(g.side() == 32 && g.v() == 72 && verified(g), "verified GHD(32,72)");
  });

  run(8, "oracles", 0, [](Outcome& out) {
    out.require(search::exhaustive_ghd(2, 6).existence == search::Existence::Empty, "GHD(2,6) Empty");
    out.require(search::exhaustive_ghd(3, 9).existence == search::Existence::Empty, "GHD(3,9) Empty");
    auto one = search::exhaustive_ghd(1, 3);
    out.require(one.existence == search::Existence::Exists && one.witness && verified(*one.witness), "GHD(1,3) Exists");
    out.require(search::search_imols(6, 1).status == search::Status::ProvenEmpty, "IMOLS(6,1) proven empty");
    search::SearchBudget budget;
    budget.wall_limit = 60;
    auto t0 = Clock::now();
    auto r = search::search_transitive_starter(8, 2, budget);
    const double t = seconds_since(t0);
    out.require(r.status == search::Status::Found && r.witness && starter::validate(*r.witness).ok() &&
                    verified(starter::expand(*r.witness)) && t < 60,
                "transitive starter for n=8, x=2 within 60 s");
  });

  run(9, "converters", 5, converters);
  run(10, "property suites", 0, properties);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
