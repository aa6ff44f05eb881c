// ghd: verify, expand, build, search, catalog and convert designs.
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ghd/catalog.hpp"
#include "ghd/convert.hpp"
#include "ghd/error.hpp"
#include "ghd/frame.hpp"
#include "ghd/grid_io.hpp"
#include "ghd/latin_io.hpp"
#include "ghd/recipe.hpp"
#include "ghd/search.hpp"
#include "ghd/starter.hpp"
#include "ghd/verify.hpp"

namespace {

using namespace ghd;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Loaded {
  GhdArray design;
  std::vector<SymbolId> hole;  // infinite points of a transitive starter
  std::optional<frames::GhfArray> frame;
};

Loaded load_design(const std::string& path) {
  const std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 5, "kind=") == 0) {
    auto any = starter::parse(text);
    if (auto* t = std::get_if<starter::TransitiveStarterAdder>(&any)) return {starter::expand(*t), starter::infinite_symbols(*t), {}};
    return {starter::expand(std::get<starter::IntransitiveStarterAdder>(any)), {}, {}};
  }
  if (first != std::string::npos && text.compare(first, 3, "pa ") == 0) return {parse_pa(text), {}, {}};
  if (first != std::string::npos && text.compare(first, 4, "dcw ") == 0) return {parse_dcw(text), {}, {}};
  if (first != std::string::npos && text[first] == '{') {
    auto j = nlohmann::json::parse(text);
    if (j.contains("groups")) {
      auto f = frames::frame_from_json(j);
      return {f.grid, {}, f};
    }
    return {grid_from_json(j), {}, {}};
  }
  return {parse_text_grid(text), {}, {}};
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-") std::cout << content;
  else write_file(out, content);
}

std::string render(const GhdArray& g, const std::string& format) {
  if (format == "json") return grid_to_json(g).dump(1) + "\n";
  if (format == "pa") return format_pa(g);
  if (format == "dcw") return format_dcw(g);
  return format_text_grid(g);
}

std::string describe(const GhdArray& g) {
  return "GHD(" + std::to_string(g.side()) + "," + std::to_string(g.v()) + ")";
}

int report(const VerificationReport& rep, const std::string& what) {
  if (rep.ok()) return kPass;
  std::cerr << what << ": " << rep.summary(20) << '\n';
  return kFail;
}

search::SearchBudget budget_from(long long nodes, double wall, int threads, unsigned seed) {
  search::SearchBudget b;
  if (nodes > 0) b.node_limit = nodes;
  if (wall > 0) b.wall_limit = wall;
  b.threads = threads;
  b.seed_order = seed;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Howell designs: verification, constructions and search"};
  app.require_subcommand(1);

  // verify
  std::string verify_path, star_opt = "none";
  auto* verify = app.add_subcommand("verify", "Check the design axioms of a grid, starter or frame");
  verify->add_option("file", verify_path, "grid (.grid/.json), starter (.sa), pa or dcw file")->required();
  verify->add_option("--star", star_opt, "none, auto (find a hole of size v-2s) or a comma list of labels");

  // expand
  std::string expand_path, expand_out, expand_format = "grid", check_against;
  auto* expand = app.add_subcommand("expand", "Develop a starter-adder into its array");
  expand->add_option("file", expand_path, "starter file")->required();
  expand->add_option("-o,--output", expand_out, "output file (default stdout)");
  expand->add_option("--format", expand_format, "grid, json, pa or dcw")->check(CLI::IsMember({"grid", "json", "pa", "dcw"}));
  expand->add_option("--check-against", check_against, "grid the expansion must equal cell-for-cell");

  // build
  std::string recipe_path, build_out, build_format = "json";
  auto* build = app.add_subcommand("build", "Run a construction recipe");
  build->add_option("--recipe", recipe_path, "recipe JSON")->required();
  build->add_option("-o,--output", build_out, "output file (default: summary only)");
  build->add_option("--format", build_format, "grid, json, pa or dcw")->check(CLI::IsMember({"grid", "json", "pa", "dcw"}));

  // search
  long long node_limit = 0;
  double wall_limit = 0;
  int threads = 0;
  unsigned seed = 0;
  std::string search_out;
  auto* search = app.add_subcommand("search", "Search for starters, IMOLS or small designs");
  search->require_subcommand(1);
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--node-limit", node_limit, "nodes per root branch");
    c->add_option("--wall-limit", wall_limit, "seconds for the whole search");
    c->add_option("--threads", threads, "worker threads (0: all cores)");
    c->add_option("--seed-order", seed, "shuffle of the root branches (0: natural order)");
    c->add_option("-o,--output", search_out, "write the witness here");
  };
  int sn = 0, sx = 0;
  std::string skind = "transitive";
  auto* s_starter = search->add_subcommand("starter", "Transitive or intransitive starter-adder");
  s_starter->add_option("--kind", skind)->check(CLI::IsMember({"transitive", "intransitive"}));
  s_starter->add_option("-n", sn)->required();
  s_starter->add_option("-x", sx)->required();
  add_budget(s_starter);
  int iy = 0, ia = 0, it = 3;
  auto* s_imols = search->add_subcommand("imols", "Incomplete MOLS, cached under GHD_CACHE_DIR");
  s_imols->add_option("-y", iy)->required();
  s_imols->add_option("-a", ia)->required();
  s_imols->add_option("-t", it, "number of squares");
  add_budget(s_imols);
  int es = 0, ev = 0;
  bool allow_long = false;
  auto* s_exh = search->add_subcommand("exhaustive", "Existence of a GHD(s,v), s <= 6");
  s_exh->add_option("-s", es)->required();
  s_exh->add_option("-v", ev)->required();
  s_exh->add_flag("--allow-long", allow_long, "permit GHD(6,15)");
  add_budget(s_exh);

  // catalog
  auto* cat = app.add_subcommand("catalog", "Shipped starters and grids");
  cat->require_subcommand(1);
  auto* c_list = cat->add_subcommand("list", "Entries and their status");
  std::string show_id, show_format = "grid";
  auto* c_show = cat->add_subcommand("show", "Print one entry");
  c_show->add_option("id", show_id)->required();
  c_show->add_option("--format", show_format, "grid, json, pa, dcw or source")
      ->check(CLI::IsMember({"grid", "json", "pa", "dcw", "source"}));
  auto* c_check = cat->add_subcommand("check-all", "Verify every entry; fails if any is quarantined");

  // convert
  std::string conv_path, conv_to, conv_out;
  auto* convert = app.add_subcommand("convert", "Translate between design formats");
  convert->add_option("file", conv_path)->required();
  convert->add_option("--to", conv_to)->required()->check(CLI::IsMember({"pa", "dcw", "grid", "json"}));
  convert->add_option("-o,--output", conv_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      Loaded in = load_design(verify_path);
      if (in.frame) {
        int rc = report(frames::verify_frame(*in.frame), "frame");
        std::cout << "frame of side " << in.frame->grid.side() << (rc == kPass ? " verified" : " FAILED") << '\n';
        return rc;
      }
      int rc = report(verify_ghd(in.design), "design");
      std::cout << describe(in.design) << (rc == kPass ? " verified" : " FAILED") << '\n';
      if (star_opt != "none") {
        std::vector<SymbolId> hole;
        const int size = star_hole_size(in.design);
        if (star_opt == "auto") {
          if (!in.hole.empty()) hole = in.hole;
          else if (auto h = find_pairwise_hole(in.design, size)) hole = *h;
        } else {
          std::stringstream ss(star_opt);
          for (std::string tok; std::getline(ss, tok, ',');) {
            auto id = in.design.find(parse_label(tok));
            if (!id) {
              std::cerr << "unknown symbol " << tok << '\n';
              return kUsage;
            }
            hole.push_back(*id);
          }
        }
        if (hole.empty() && size > 0) {
          std::cerr << "no pairwise hole of size " << size << '\n';
          return kFail;
        }
        int src = report(verify_star(in.design, hole), "star");
        std::cout << "star hole of size " << hole.size() << ":";
        for (SymbolId s : hole) std::cout << ' ' << to_string(in.design.label(s));
        std::cout << (src == kPass ? "" : " FAILED") << '\n';
        rc = std::max(rc, src);
      }
      return rc;
    }

    if (*expand) {
      Loaded in = load_design(expand_path);
      int rc = report(verify_ghd(in.design), "expansion");
      if (!check_against.empty()) {
        Loaded ref = load_design(check_against);
        if (ref.design.side() != in.design.side()) {
          std::cerr << "sides differ: " << in.design.side() << " vs " << ref.design.side() << '\n';
          rc = kFail;
        } else {
          auto diff = catalog::differing_cells(in.design, ref.design);
          for (auto [r, c] : diff) std::cerr << "cell (" << r << "," << c << ") differs\n";
          if (!diff.empty()) {
            std::cerr << diff.size() << " cells differ from " << check_against << '\n';
            rc = kFail;
          }
        }
      }
      emit(expand_out, render(in.design, expand_format));
      return rc;
    }

    if (*build) {
      auto res = recipe::run_recipe(recipe::load_recipe(recipe_path));
      for (const auto& line : res.log) std::cerr << line << '\n';
      if (auto* d = std::get_if<composite::StarDesign>(&res.output)) {
        int rc = report(verify_ghd(d->design), "result");
        std::cout << describe(d->design) << (rc == kPass ? " verified" : " FAILED") << '\n';
        if (!build_out.empty()) emit(build_out, render(d->design, build_format));
        return rc;
      }
      if (auto* f = std::get_if<frames::GhfArray>(&res.output)) {
        int rc = report(frames::verify_frame(*f), "frame");
        std::cout << "frame of side " << f->grid.side() << (rc == kPass ? " verified" : " FAILED") << '\n';
        if (!build_out.empty()) emit(build_out, frames::to_json(*f).dump(1) + "\n");
        return rc;
      }
      nlohmann::json j = std::holds_alternative<latin::MolsSet>(res.output)
                             ? latin::to_json(std::get<latin::MolsSet>(res.output))
                             : latin::to_json(std::get<latin::ImolsSet>(res.output));
      emit(build_out, j.dump(1) + "\n");
      return kPass;
    }

    if (*search) {
      auto budget = budget_from(node_limit, wall_limit, threads, seed);
      auto finish = [&](std::string_view status, long long nodes, const std::string& text) {
        std::cout << status << " (" << nodes << " nodes)\n";
        if (!text.empty()) emit(search_out, text);
        return status == "Found" || status == "Exists" ? kPass : kFail;
      };
      if (*s_starter) {
        if (skind == "transitive") {
          auto r = search::search_transitive_starter(sn, sx, budget);
          return finish(search::to_string(r.status), r.nodes, r.witness ? starter::format(*r.witness) : "");
        }
        auto r = search::search_intransitive_starter(sn, sx, budget);
        return finish(search::to_string(r.status), r.nodes, r.witness ? starter::format(*r.witness) : "");
      }
      if (*s_imols) {
        auto r = search::search_imols(iy, ia, it, budget);
        return finish(search::to_string(r.status), r.nodes, r.witness ? latin::to_json(*r.witness).dump(1) + "\n" : "");
      }
      auto r = search::exhaustive_ghd(es, ev, budget, allow_long);
      return finish(search::to_string(r.existence), r.nodes, r.witness ? format_text_grid(*r.witness) : "");
    }

    if (*cat) {
      auto catalog = catalog::load_catalog();
      if (*c_list || *c_check) {
        for (const auto& e : catalog.entries) {
          std::cout << (e.verified() ? "ok          " : "QUARANTINED ") << e.id << "  GHD(" << e.expected.s << ","
                    << e.expected.v << ")" << (e.expected.star.value_or(false) ? "*" : "") << "  "
                    << catalog::to_string(e.kind) << '\n';
          if (*c_check)
            for (const auto& d : e.diagnostics) std::cout << "    " << d << '\n';
        }
        std::cout << catalog.verified_count() << " verified, " << catalog.quarantined_count() << " quarantined\n";
        return *c_check && catalog.quarantined_count() > 0 ? kFail : kPass;
      }
      const auto* e = catalog.find(show_id);
      if (!e) {
        std::cerr << "no entry " << show_id << '\n';
        return kUsage;
      }
      if (show_format == "source") std::cout << read_file(e->file);
      else if (e->design) std::cout << render(*e->design, show_format);
      for (const auto& d : e->diagnostics) std::cerr << d << '\n';
      return e->verified() ? kPass : kFail;
    }

    if (*convert) {
      Loaded in = load_design(conv_path);
      emit(conv_out, render(in.design, conv_to));
      return kPass;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ErrorKind::MalformedInput || e.kind() == ErrorKind::ParseError ? kUsage : kFail;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
