#include "ghd/recipe.hpp"

#include <set>

#include "ghd/error.hpp"
#include "ghd/grid_io.hpp"
#include "ghd/starter.hpp"
#include "ghd/verify.hpp"

namespace ghd::recipe {

Recipe load_recipe(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::ParseError, path.string() + ": " + ex.what());
  }
  return parse_recipe(doc, path.parent_path());
}

Recipe parse_recipe(const nlohmann::json& doc, std::filesystem::path base_dir) {
  if (!doc.is_object() || !doc.contains("steps") || !doc["steps"].is_array())
    fail(ErrorKind::MalformedInput, "a recipe needs a \"steps\" array");
  std::set<std::string> names;
  for (const auto& st : doc["steps"]) {
    if (!st.contains("name") || !st.contains("op")) fail(ErrorKind::MalformedInput, "every step needs a name and an op");
    if (!names.insert(st["name"].get<std::string>()).second)
      fail(ErrorKind::MalformedInput, "duplicate step " + st["name"].get<std::string>());
  }
  return {doc, std::move(base_dir)};
}

namespace {

class Runner {
 public:
  Runner(const Recipe& r, const RunOptions& opts) : r_(r), opts_(opts) {
    for (const auto& st : r.doc["steps"]) steps_[st["name"].get<std::string>()] = &st;
  }

  RecipeResult run() {
    std::string out;
    if (r_.doc.contains("output")) out = r_.doc["output"].get<std::string>();
    else out = r_.doc["steps"].back()["name"].get<std::string>();
    Value v = step(out);
    return {std::move(v), std::move(log_)};
  }

  const Value& step(const std::string& name) {
    if (auto it = done_.find(name); it != done_.end()) return it->second;
    auto st = steps_.find(name);
    if (st == steps_.end()) fail(ErrorKind::MissingIngredient, "no step named " + name);
    if (!active_.insert(name).second) fail(ErrorKind::MalformedInput, "recipe has a cycle through " + name);
    Value v = execute(*st->second);
    active_.erase(name);
    log_.push_back(name + ": " + describe(v));
    return done_.emplace(name, std::move(v)).first->second;
  }

  Value resolve(const nlohmann::json& ref) {
    if (ref.is_object()) return execute(ref);
    const std::string s = ref.get<std::string>();
    if (s.rfind("catalog:", 0) == 0) {
      const auto& e = catalog().at(s.substr(8));
      if (!e.verified()) fail(ErrorKind::MissingIngredient, "catalog entry " + e.id + " is quarantined");
      return composite::StarDesign{*e.design, e.hole};
    }
    if (s.rfind("file:", 0) == 0) return load(r_.base_dir / s.substr(5));
    if (s.rfind("mols:", 0) == 0) {
      auto rest = s.substr(5);
      auto colon = rest.find(':');
      int q = std::stoi(rest.substr(0, colon));
      int t = colon == std::string::npos ? 3 : std::stoi(rest.substr(colon + 1));
      return latin::mols_from_field(q, t);
    }
    return step(s);
  }

  template <class T>
  T get(const nlohmann::json& st, const char* key) {
    if (!st.contains(key)) fail(ErrorKind::MalformedInput, std::string("step needs \"") + key + "\"");
    Value v = resolve(st[key]);
    if (auto* p = std::get_if<T>(&v)) return std::move(*p);
    fail(ErrorKind::MalformedInput, std::string("\"") + key + "\" has the wrong kind of value");
  }

 private:
  const catalog::Catalog& catalog() {
    if (opts_.catalog) return *opts_.catalog;
    if (!own_catalog_) own_catalog_ = catalog::load_catalog();
    return *own_catalog_;
  }

  static int num(const nlohmann::json& st, const char* key) {
    if (!st.contains(key)) fail(ErrorKind::MalformedInput, std::string("step needs \"") + key + "\"");
    return st[key].get<int>();
  }

  static std::vector<SymbolId> star_hole(const GhdArray& g) {
    auto h = find_pairwise_hole(g, star_hole_size(g));
    if (!h) fail(ErrorKind::MissingIngredient, "design has no star hole");
    return *h;
  }

  composite::StarDesign load(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    if (path.extension() == ".sa") {
      auto any = starter::parse(text);
      return std::visit([](auto&& sa) { return expanded(sa); }, any);
    }
    return {load_grid(path), {}};
  }

  static composite::StarDesign expanded(const starter::TransitiveStarterAdder& sa) {
    return {starter::expand(sa), starter::infinite_symbols(sa)};
  }
  static composite::StarDesign expanded(const starter::IntransitiveStarterAdder& sa) {
    return {starter::expand(sa), {}};
  }

  Value execute(const nlohmann::json& st) {
    const std::string op = st.at("op").get<std::string>();
    if (op == "mols") return latin::mols_from_field(num(st, "q"), st.value("t", 3));
    if (op == "imols") {
      auto res = search::search_imols(num(st, "y"), num(st, "a"), st.value("t", 3), opts_.budget);
      if (!res.witness)
        fail(ErrorKind::MissingIngredient, "no IMOLS(" + std::to_string(num(st, "y")) + "," +
                                               std::to_string(num(st, "a")) + "): " + std::string(search::to_string(res.status)));
      return std::move(*res.witness);
    }
    if (op == "expand" || op == "load") {
      Value v = resolve(st.at("source"));
      if (!std::holds_alternative<composite::StarDesign>(v)) fail(ErrorKind::MalformedInput, "source is not a design");
      return v;
    }
    if (op == "frame_from_mols_imols") {
      auto mols = get<latin::MolsSet>(st, "mols");
      auto parts = st.at("v_parts").get<std::vector<int>>();
      std::map<std::pair<int, int>, latin::ImolsSet> given;
      if (st.contains("imols"))
        for (const auto& ref : st["imols"]) {
          Value v = resolve(ref);
          auto* m = std::get_if<latin::ImolsSet>(&v);
          if (!m) fail(ErrorKind::MalformedInput, "\"imols\" entries must be IMOLS");
          given.emplace(std::make_pair(m->order, m->hole_size()), std::move(*m));
        }
      const bool search_missing = st.value("search", true);
      frames::ImolsSupplier supply = [&](int order, int hole) -> std::optional<latin::ImolsSet> {
        if (auto it = given.find({order, hole}); it != given.end()) return it->second;
        if (!search_missing) return std::nullopt;
        auto res = search::search_imols(order, hole, 3, opts_.budget);
        return res.witness;
      };
      return frames::frame_from_mols_imols(num(st, "h"), num(st, "m"), parts, mols, supply).frame;
    }
    if (op == "basic_frame_construction") {
      auto frame = get<frames::GhfArray>(st, "frame");
      const int e = num(st, "e"), u = st.value("u", 0);
      std::vector<frames::Ingredient> ingredients;
      for (const auto& ing : st.at("ingredients")) {
        auto d = get<composite::StarDesign>(ing, "design");
        frames::Ingredient in{d.design, {}, {}, {}};
        if (ing.contains("sub_rows")) {
          in.sub_rows = ing["sub_rows"].get<std::vector<int>>();
          in.sub_cols = ing.at("sub_cols").get<std::vector<int>>();
        } else {
          auto sq = find_empty_subsquare(d.design, e);
          if (!sq) fail(ErrorKind::MissingIngredient, "ingredient has no empty " + std::to_string(e) + "x" + std::to_string(e));
          in.sub_rows = sq->rows;
          in.sub_cols = sq->cols;
        }
        const int repeat = ing.value("repeat", 1);
        for (int i = 0; i < repeat; ++i) ingredients.push_back(in);
      }
      return composite::StarDesign{frames::basic_frame_construction(frame, e, u, ingredients), {}};
    }
    if (op == "stinson_rtd" || op == "power2") {
      composite::StarLibrary lib;
      if (st.contains("ingredients"))
        for (const auto& ref : st["ingredients"]) {
          Value v = resolve(ref);
          auto* d = std::get_if<composite::StarDesign>(&v);
          if (!d) fail(ErrorKind::MalformedInput, "ingredients must be designs");
          auto hole = d->hole.empty() ? star_hole(d->design) : d->hole;
          lib.add(composite::normalize_star(d->design, hole, hole.front()));
        }
      if (op == "power2") {
        const std::string lemma = st.at("lemma").get<std::string>();
        if (lemma != "5.1" && lemma != "5.2") fail(ErrorKind::MalformedInput, "lemma must be \"5.1\" or \"5.2\"");
        auto which = lemma == "5.1" ? composite::Power2Lemma::Lemma51 : composite::Power2Lemma::Lemma52;
        return composite::power2_recipe(which, num(st, "m"), lib);
      }
      return composite::stinson_rtd(num(st, "n"), num(st, "g"), st.at("u").get<std::vector<int>>(), lib.supplier());
    }
    if (op == "product") {
      auto d = get<composite::StarDesign>(st, "design");
      auto m = get<latin::MolsSet>(st, "mols");
      return composite::StarDesign{latin::ghd_mols_product(d.design, m), {}};
    }
    if (op == "verify") {
      Value v = resolve(st.at("design"));
      if (auto* f = std::get_if<frames::GhfArray>(&v)) {
        auto rep = frames::verify_frame(*f);
        if (!rep.ok()) fail(ErrorKind::InvalidDesign, "frame: " + rep.summary());
        return v;
      }
      auto* d = std::get_if<composite::StarDesign>(&v);
      if (!d) fail(ErrorKind::MalformedInput, "verify needs a design or frame");
      auto rep = verify_ghd(d->design);
      if (!rep.ok()) fail(ErrorKind::InvalidDesign, rep.summary());
      if (st.contains("expect")) {
        const auto& x = st["expect"];
        if (x.contains("s") && x["s"].get<int>() != d->design.side())
          fail(ErrorKind::InvalidDesign, "side " + std::to_string(d->design.side()));
        if (x.contains("v") && x["v"].get<int>() != d->design.v())
          fail(ErrorKind::InvalidDesign, "v = " + std::to_string(d->design.v()));
        if (x.value("star", false)) {
          if (d->hole.empty()) d->hole = star_hole(d->design);
          auto srep = verify_star(d->design, d->hole);
          if (!srep.ok()) fail(ErrorKind::InvalidDesign, "star: " + srep.summary());
        }
      }
      return v;
    }
    fail(ErrorKind::MalformedInput, "unknown op " + op);
  }

  static std::string describe(const Value& v) {
    struct {
      std::string operator()(const composite::StarDesign& d) const {
        return "GHD(" + std::to_string(d.design.side()) + "," + std::to_string(d.design.v()) + ")" +
               (d.hole.empty() ? "" : " hole " + std::to_string(d.hole.size()));
      }
      std::string operator()(const frames::GhfArray& f) const {
        return "frame side " + std::to_string(f.grid.side()) + ", " + std::to_string(f.spans.size()) + " groups";
      }
      std::string operator()(const latin::MolsSet& m) const {
        return std::to_string(m.count()) + " MOLS(" + std::to_string(m.order) + ")";
      }
      std::string operator()(const latin::ImolsSet& m) const {
        return std::to_string(m.count()) + " IMOLS(" + std::to_string(m.order) + "," + std::to_string(m.hole_size()) + ")";
      }
    } visitor;
    return std::visit(visitor, v);
  }

  const Recipe& r_;
  const RunOptions& opts_;
  std::map<std::string, const nlohmann::json*> steps_;
  std::map<std::string, Value> done_;
  std::set<std::string> active_;
  std::vector<std::string> log_;
  std::optional<catalog::Catalog> own_catalog_;
};

}  // namespace

RecipeResult run_recipe(const Recipe& r, const RunOptions& opts) { return Runner(r, opts).run(); }

}  // namespace ghd::recipe
