#include "ghd/starter.hpp"

#include <algorithm>

#include "ghd/error.hpp"

namespace ghd::starter {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string point_str(const Point& p) {
  return p.infinite ? "inf" + std::to_string(p.value) : std::to_string(p.value) + "_" + std::to_string(p.level);
}

std::string triple_str(const Triple& t) {
  return "{" + point_str(t[0]) + " " + point_str(t[1]) + " " + point_str(t[2]) + "}";
}

// Tracks pure and mixed differences over Z_g with `levels` copies.
class Differences {
 public:
  Differences(int g, int levels) : g_(g), levels_(levels), used_(levels * levels, std::vector<char>(g)) {}

  // Records the differences of the finite pair {p, q}; returns an error
  // description or an empty string.
  std::string add(const Point& p, const Point& q) {
    if (p.level == q.level) {
      int d = mod(p.value - q.value, g_);
      int e = mod(q.value - p.value, g_);
      auto& used = used_[p.level * levels_ + p.level];
      if (d == e) return "pure difference " + std::to_string(d) + " has order two";
      if (used[d] || used[e]) return "pure (" + lv(p) + "," + lv(p) + ") difference +-" + std::to_string(d) + " repeated";
      used[d] = used[e] = 1;
      return {};
    }
    const Point& a = p.level < q.level ? p : q;
    const Point& b = p.level < q.level ? q : p;
    int d = mod(a.value - b.value, g_);
    auto& used = used_[a.level * levels_ + b.level];
    if (used[d]) return "mixed (" + lv(a) + "," + lv(b) + ") difference " + std::to_string(d) + " repeated";
    used[d] = 1;
    return {};
  }

 private:
  static std::string lv(const Point& p) { return std::to_string(p.level); }
  int g_;
  int levels_;
  std::vector<std::vector<char>> used_;
};

// One slot per point of Z_g x levels plus `inf` infinite points.
class Cover {
 public:
  Cover(int g, int levels, int inf, int inf_base) : g_(g), levels_(levels), inf_base_(inf_base), seen_(g * levels + inf) {}

  bool in_range(const Point& p) const {
    if (p.infinite) return p.value - inf_base_ >= 0 && p.value - inf_base_ < static_cast<int>(seen_.size()) - g_ * levels_;
    return p.value >= 0 && p.value < g_ && p.level >= 0 && p.level < levels_;
  }
  void add(const Point& p) { ++seen_[slot(p)]; }
  void report(VerificationReport& rep, ViolationKind kind, const std::string& what) const {
    for (std::size_t i = 0; i < seen_.size(); ++i) {
      if (seen_[i] == 1) continue;
      Point p = i < static_cast<std::size_t>(g_ * levels_)
                    ? Point::finite(static_cast<int>(i) % g_, static_cast<int>(i) / g_)
                    : Point::inf(static_cast<int>(i) - g_ * levels_ + inf_base_);
      rep.add(kind, -1, -1, what + ": " + point_str(p) + (seen_[i] ? " covered twice" : " not covered"));
    }
  }

 private:
  std::size_t slot(const Point& p) const {
    return p.infinite ? g_ * levels_ + (p.value - inf_base_) : p.level * g_ + p.value;
  }
  int g_, levels_, inf_base_;
  std::vector<int> seen_;
};

Point shift(const Point& p, int a, int g) { return p.infinite ? p : Point::finite(mod(p.value + a, g), p.level); }

bool in_orbit(const TransitiveStarterAdder& sa, int index) {
  for (const auto& c : sa.orbits)
    if (std::find(c.begin(), c.end(), index) != c.end()) return true;
  return false;
}

}  // namespace

SymbolId finite_id(int residue, int level, int group_order) {
  return static_cast<SymbolId>(level * group_order + residue);
}

SymbolId infinite_id(int index, int group_order, int levels) {
  return static_cast<SymbolId>(levels * group_order + index);
}

namespace {

std::vector<Symbol> starter_symbols(int g, int levels, int inf, int inf_base) {
  std::vector<Label> labels;
  for (int l = 0; l < levels; ++l)
    for (int r = 0; r < g; ++r) labels.push_back(FiniteLabel{r, l});
  for (int i = 0; i < inf; ++i) labels.push_back(InfiniteLabel{i + inf_base});
  return make_symbols(labels);
}

}  // namespace

VerificationReport validate(const TransitiveStarterAdder& sa) {
  VerificationReport rep;
  const int g = sa.group_order();
  const int inf = sa.infinite_count();
  if (sa.n < 1 || sa.x < 0 || inf < 0) {
    rep.add(ViolationKind::ParamBound, -1, -1, "need n >= 1 and 0 <= 2x <= n");
    return rep;
  }
  if (static_cast<int>(sa.blocks.size()) != sa.n) {
    rep.add(ViolationKind::ParamBound, -1, -1,
            std::to_string(sa.blocks.size()) + " blocks, expected " + std::to_string(sa.n));
    return rep;
  }
  Cover starter(g, 2, inf, sa.inf_base), shifted(g, 2, inf, sa.inf_base);
  for (const auto& b : sa.blocks)
    for (const auto& p : b.points)
      if (!starter.in_range(p)) {
        rep.add(ViolationKind::ParamBound, -1, -1, "point " + point_str(p) + " outside the point set");
        return rep;
      }
  for (const auto& c : sa.orbits)
    for (int i : c)
      if (i < sa.inf_base || i >= sa.inf_base + inf) {
        rep.add(ViolationKind::ParamBound, -1, -1, "orbit moves a point that is not an infinite point");
        return rep;
      }

  std::vector<char> adder_used(g);
  Differences diffs(g, 2);
  for (const auto& b : sa.blocks) {
    int a = mod(b.adder, g);
    if (adder_used[a]) rep.add(ViolationKind::CellArity, -1, -1, "adder " + std::to_string(a) + " used twice");
    adder_used[a] = 1;
    int infs = 0;
    for (const auto& p : b.points) {
      starter.add(p);
      shifted.add(shift(p, a, g));
      infs += p.infinite;
    }
    if (infs > 1) rep.add(ViolationKind::ParamBound, -1, -1, triple_str(b.points) + " has two infinite points");
    if (infs == 1) {
      auto it = std::find_if(b.points.begin(), b.points.end(), [](const Point& p) { return p.infinite; });
      std::vector<Point> rest;
      for (const auto& p : b.points)
        if (!p.infinite) rest.push_back(p);
      bool split = rest[0].level != rest[1].level;
      if (!split && !in_orbit(sa, it->value))
        rep.add(ViolationKind::ParamBound, -1, -1, triple_str(b.points) + " needs one point of each level");
    }
    if (!sa.orbits.empty()) continue;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (b.points[i].infinite || b.points[j].infinite) continue;
        if (auto err = diffs.add(b.points[i], b.points[j]); !err.empty())
          rep.add(ViolationKind::PairExcess, -1, -1, err + " in " + triple_str(b.points));
      }
  }
  starter.report(rep, ViolationKind::RowCover, "starter");
  shifted.report(rep, ViolationKind::ColCover, "starter + adder");

  if (rep.ok() && !sa.orbits.empty()) {
    try {
      rep.merge(verify_ghd(expand(sa)));
    } catch (const Error& e) {
      rep.add(ViolationKind::CellArity, -1, -1, e.what());
    }
  }
  return rep;
}

VerificationReport validate(const IntransitiveStarterAdder& sa) {
  VerificationReport rep;
  const int n = sa.n;
  if (n < 1 || sa.x < 0 || sa.x > n) {
    rep.add(ViolationKind::ParamBound, -1, -1, "need n >= 1 and 0 <= x <= n");
    return rep;
  }
  if (static_cast<int>(sa.S.size()) != n - sa.x || static_cast<int>(sa.R.size()) != sa.x ||
      static_cast<int>(sa.C.size()) != sa.x) {
    rep.add(ViolationKind::ParamBound, -1, -1, "need n-x starter blocks and x blocks in each of R and C");
    return rep;
  }
  Cover rows(n, 3, 0, 0), cols(n, 3, 0, 0);
  auto all = [&](auto&& f) {
    for (const auto& b : sa.S) f(b.points);
    for (const auto& t : sa.R) f(t);
    for (const auto& t : sa.C) f(t);
  };
  bool range_ok = true;
  all([&](const Triple& t) {
    for (const auto& p : t)
      if (!rows.in_range(p)) range_ok = false;
  });
  if (!range_ok) {
    rep.add(ViolationKind::ParamBound, -1, -1, "point outside Z_n x {0,1,2}");
    return rep;
  }
  std::vector<char> adder_used(n);
  for (const auto& b : sa.S) {
    int a = mod(b.adder, n);
    if (adder_used[a]) rep.add(ViolationKind::CellArity, -1, -1, "adder " + std::to_string(a) + " used twice");
    adder_used[a] = 1;
    for (const auto& p : b.points) {
      rows.add(p);
      cols.add(shift(p, a, n));
    }
  }
  auto one_per_level = [&](const Triple& t, const char* which) {
    std::array<int, 3> lv{};
    for (const auto& p : t) ++lv[p.level];
    if (lv != std::array<int, 3>{1, 1, 1})
      rep.add(ViolationKind::ParamBound, -1, -1, std::string(which) + " block " + triple_str(t) + " must meet each level once");
  };
  for (const auto& t : sa.R) {
    one_per_level(t, "R");
    for (const auto& p : t) rows.add(p);
  }
  for (const auto& t : sa.C) {
    one_per_level(t, "C");
    for (const auto& p : t) cols.add(p);
  }
  Differences diffs(n, 3);
  all([&](const Triple& t) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (auto err = diffs.add(t[i], t[j]); !err.empty())
          rep.add(ViolationKind::PairExcess, -1, -1, err + " in " + triple_str(t));
  });
  rows.report(rep, ViolationKind::RowCover, "S u R");
  cols.report(rep, ViolationKind::ColCover, "(S + A) u C");
  return rep;
}

GhdArray expand(const TransitiveStarterAdder& sa) {
  const int g = sa.group_order();
  const int inf = sa.infinite_count();
  if (g < 1 || inf < 0) fail(ErrorKind::InvalidDesign, "bad starter parameters");
  std::vector<std::vector<int>> where(inf);  // infinite index -> (cycle, position)
  for (std::size_t c = 0; c < sa.orbits.size(); ++c)
    for (std::size_t pos = 0; pos < sa.orbits[c].size(); ++pos) {
      int i = sa.orbits[c][pos] - sa.inf_base;
      if (i < 0 || i >= inf) fail(ErrorKind::InvalidDesign, "orbit entry outside the infinite points");
      where[i] = {static_cast<int>(c), static_cast<int>(pos)};
    }
  GridBuilder grid(g, starter_symbols(g, 2, inf, sa.inf_base));
  for (int row = 0; row < g; ++row)
    for (const auto& b : sa.blocks) {
      std::vector<SymbolId> m;
      for (const auto& p : b.points) {
        if (!p.infinite) {
          m.push_back(finite_id(mod(p.value + row, g), p.level, g));
          continue;
        }
        int i = p.value - sa.inf_base;
        if (i < 0 || i >= inf) fail(ErrorKind::InvalidDesign, "infinite point " + point_str(p) + " out of range");
        if (!where[i].empty()) {
          const auto& cyc = sa.orbits[where[i][0]];
          i = cyc[(where[i][1] + row) % cyc.size()] - sa.inf_base;
        }
        m.push_back(infinite_id(i, g, 2));
      }
      grid.place(row, mod(row - b.adder, g), Block(std::move(m)));
    }
  return grid.build();
}

GhdArray expand(const IntransitiveStarterAdder& sa) {
  const int n = sa.n;
  if (n < 1 || sa.x < 0) fail(ErrorKind::InvalidDesign, "bad starter parameters");
  GridBuilder grid(n + sa.x, starter_symbols(n, 3, 0, 0));
  auto moved = [&](const Triple& t, int i) {
    std::vector<SymbolId> m;
    for (const auto& p : t) {
      if (p.infinite || p.level < 0 || p.level > 2 || p.value < 0 || p.value >= n)
        fail(ErrorKind::InvalidDesign, "point " + point_str(p) + " outside Z_n x {0,1,2}");
      m.push_back(finite_id(mod(p.value + i, n), p.level, n));
    }
    return Block(std::move(m));
  };
  for (int i = 0; i < n; ++i) {
    for (const auto& b : sa.S) grid.place(i, mod(i - b.adder, n), moved(b.points, i));
    for (std::size_t j = 0; j < sa.R.size(); ++j) grid.place(i, n + static_cast<int>(j), moved(sa.R[j], i));
    for (std::size_t j = 0; j < sa.C.size(); ++j) grid.place(n + static_cast<int>(j), i, moved(sa.C[j], i));
  }
  return grid.build();
}

std::vector<SymbolId> infinite_symbols(const TransitiveStarterAdder& sa) {
  std::vector<SymbolId> out;
  for (int i = 0; i < sa.infinite_count(); ++i) out.push_back(infinite_id(i, sa.group_order(), 2));
  return out;
}

Subsquare translate_subsquare(const TransitiveStarterAdder& sa) {
  const int half = sa.group_order() / 2;
  return {{0, half}, {0, half}};
}

}  // namespace ghd::starter
