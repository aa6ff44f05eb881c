#include <bitset>
#include <fstream>

#include "search_internal.hpp"

#include "ghd/error.hpp"
#include "ghd/field.hpp"
#include "ghd/latin_io.hpp"

namespace ghd::search {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// ---- cyclic -------------------------------------------------------------
//
// Square q over Z_n with a fixed infinite points: L(i,j) = f_q(j-i) + i,
// L(i,inf_k) = r_q(k) + i, L(inf_k,j) = c_q(k) + j. Infinite symbols in f are
// fixed under development. The hole is the infinite rows and columns.

constexpr int kInf = -1;

class CyclicSearch {
 public:
  CyclicSearch(int n, int a, int t)
      : n_(n), a_(a), t_(t), f_(t, std::vector<int>(n, kUnset)), r_(t, std::vector<int>(a, kUnset)),
        c_(t, std::vector<int>(a, kUnset)), row_(t, std::vector<char>(n)), col_(t, std::vector<char>(n)),
        diff_(t * t, std::vector<char>(n)), infs_(t), finite_seen_(t), inf_at_(n, -1) {
    for (int q = 0; q < t; ++q) {
      for (int d = 0; d < n; ++d) vars_.push_back({q, 0, d});
      for (int k = 0; k < a; ++k) vars_.push_back({q, 1, k});
      for (int k = 0; k < a; ++k) vars_.push_back({q, 2, k});
    }
  }

  struct Var {
    int q, kind, idx;  // kind 0: f, 1: r, 2: c
  };
  struct Move {
    int var, value;
  };

  int var_count() const { return static_cast<int>(vars_.size()); }

  // Candidate values in order; kInf means the next unused infinite symbol.
  std::vector<int> candidates(int vi) const {
    const Var& v = vars_[vi];
    std::vector<int> out;
    if (v.kind == 0) {
      int left = n_ - v.idx;
      if (infs_[v.q] < a_ && inf_at_[v.idx] < 0) out.push_back(kInf);
      if (a_ - infs_[v.q] >= left) return out;
      if (!finite_seen_[v.q]) {
        out.push_back(0);
        return out;
      }
    }
    for (int x = 0; x < n_; ++x) out.push_back(x);
    return out;
  }

  bool apply(int vi, int value, std::vector<int>& undo) {
    const Var& v = vars_[vi];
    const int q = v.q;
    if (v.kind == 0 && value == kInf) {
      if (inf_at_[v.idx] >= 0) return false;
      inf_at_[v.idx] = q;
      f_[q][v.idx] = n_ + infs_[q]++;
      return true;
    }
    std::vector<char>& own = v.kind == 2 ? col_[q] : row_[q];
    if (v.kind == 0) {
      if (row_[q][value] || col_[q][mod(value - v.idx, n_)]) return false;
    } else if (own[value]) {
      return false;
    }
    const std::size_t start = undo.size();
    auto other = [&](int p) {
      if (v.kind == 0) return f_[p][v.idx] < n_ ? f_[p][v.idx] : -1;
      return v.kind == 1 ? r_[p][v.idx] : c_[p][v.idx];
    };
    for (int p = 0; p < q; ++p) {
      int w = other(p);
      if (w < 0) continue;
      int slot = p * t_ + q, d = mod(value - w, n_);
      if (diff_[slot][d]) {
        for (std::size_t i = start; i < undo.size(); i += 2) diff_[undo[i]][undo[i + 1]] = 0;
        undo.resize(start);
        return false;
      }
      diff_[slot][d] = 1;
      undo.push_back(slot);
      undo.push_back(d);
    }
    if (v.kind == 0) {
      row_[q][value] = 1;
      col_[q][mod(value - v.idx, n_)] = 1;
      finite_seen_[q] += 1;
      f_[q][v.idx] = value;
    } else {
      own[value] = 1;
      (v.kind == 1 ? r_ : c_)[q][v.idx] = value;
    }
    return true;
  }

  void revert(int vi, std::vector<int>& undo, std::size_t to) {
    const Var& v = vars_[vi];
    const int q = v.q;
    while (undo.size() > to) {
      int d = undo.back();
      undo.pop_back();
      int slot = undo.back();
      undo.pop_back();
      diff_[slot][d] = 0;
    }
    if (v.kind == 0) {
      int value = f_[q][v.idx];
      if (value >= n_) {
        inf_at_[v.idx] = -1;
        --infs_[q];
      } else {
        row_[q][value] = 0;
        col_[q][mod(value - v.idx, n_)] = 0;
        finite_seen_[q] -= 1;
      }
      f_[q][v.idx] = kUnset;
    } else {
      auto& cell = (v.kind == 1 ? r_ : c_)[q][v.idx];
      (v.kind == 2 ? col_[q] : row_[q])[cell] = 0;
      cell = kUnset;
    }
  }

  std::string describe(int vi, int value) const {
    const Var& v = vars_[vi];
    static const char* names[] = {"f", "r", "c"};
    return std::string(names[v.kind]) + std::to_string(v.q) + "(" + std::to_string(v.idx) +
           ")=" + (value == kInf ? "inf" : std::to_string(value));
  }

  bool dfs(int vi, detail::Task& task, std::vector<int>& undo) {
    if (vi == var_count()) return true;
    for (int value : candidates(vi)) {
      std::size_t mark = undo.size();
      if (!apply(vi, value, undo)) continue;
      if (!task.visit([&] { return describe(vi, value); })) {
        revert(vi, undo, mark);
        return false;
      }
      if (dfs(vi + 1, task, undo)) return true;
      revert(vi, undo, mark);
      if (task.stopped()) return false;
    }
    return false;
  }

  // Valid prefixes of the first `depth` variables, in search order.
  void prefixes(int vi, int depth, std::vector<Move>& cur, std::vector<std::vector<Move>>& out,
                std::vector<int>& undo) {
    if (vi == depth || vi == var_count()) {
      out.push_back(cur);
      return;
    }
    for (int value : candidates(vi)) {
      std::size_t mark = undo.size();
      if (!apply(vi, value, undo)) continue;
      cur.push_back({vi, value});
      prefixes(vi + 1, depth, cur, out, undo);
      cur.pop_back();
      revert(vi, undo, mark);
    }
  }

  latin::ImolsSet to_imols() const {
    const int y = n_ + a_;
    latin::ImolsSet m{y, {{}}, {}};
    for (int k = 0; k < a_; ++k) m.holes[0].push_back(n_ + k);
    for (int q = 0; q < t_; ++q) {
      latin::Square sq(y);
      for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
          int v = f_[q][mod(j - i, n_)];
          sq.at(i, j) = v >= n_ ? v : mod(v + i, n_);
        }
        for (int k = 0; k < a_; ++k) {
          sq.at(i, n_ + k) = mod(r_[q][k] + i, n_);
          sq.at(n_ + k, i) = mod(c_[q][k] + i, n_);
        }
      }
      m.squares.push_back(std::move(sq));
    }
    return m;
  }

 private:
  static constexpr int kUnset = -2;
  int n_, a_, t_;
  std::vector<std::vector<int>> f_, r_, c_;
  std::vector<std::vector<char>> row_, col_, diff_;
  std::vector<int> infs_, finite_seen_, inf_at_;
  std::vector<Var> vars_;
};

// ---- general ------------------------------------------------------------
//
// Square 0 is enumerated in a normal form: hole rows/columns/symbols are the
// last a indices, row 0 reads a..y-1 then 0..a-1, and column 0 is increasing
// over rows 1..y-a-1 and over the hole rows. Each further square is an exact
// cover of the cells outside the hole by symbol classes that are transversals
// of all earlier squares.

constexpr int kMaxOrder = 16;
using CellSet = std::bitset<kMaxOrder * kMaxOrder>;

struct Transversal {
  CellSet cells;
  std::vector<int> col;  // column per row, -1 for rows skipped by hole classes
  bool hole;
};

class GeneralSearch {
 public:
  GeneralSearch(int y, int a, int t) : y_(y), a_(a), N_(y - a), t_(t), sq_(t, latin::Square(y)) {
    rowu_.assign(y, std::vector<char>(y));
    colu_.assign(y, std::vector<char>(y));
    for (int c = 0; c < y; ++c) {
      int v = c < N_ ? a + c : c - N_;
      place(0, c, v);
    }
    for (int r = 0; r < y; ++r)
      for (int c = 0; c < y; ++c)
        if (r > 0 && !(in_hole(r) && in_hole(c))) free_.push_back({r, c});
  }

  bool in_hole(int i) const { return i >= N_; }
  struct Cell {
    int r, c;
  };

  int free_count() const { return static_cast<int>(free_.size()); }

  bool allowed(int r, int c, int v) const {
    if (rowu_[r][v] || colu_[c][v]) return false;
    if ((in_hole(r) || in_hole(c)) && v >= N_) return false;
    if (c == 0 && r > 1 && r != N_) {
      int above = sq_[0].at(r - 1, 0);
      if (v < above) return false;
    }
    return true;
  }
  void place(int r, int c, int v) {
    sq_[0].at(r, c) = v;
    rowu_[r][v] = colu_[c][v] = 1;
  }
  void unplace(int r, int c) {
    int v = sq_[0].at(r, c);
    rowu_[r][v] = colu_[c][v] = 0;
    sq_[0].at(r, c) = -1;
  }

  // Stops once `out` exceeds `cap` entries.
  void prefixes(int idx, int depth, std::size_t cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (out.size() > cap) return;
    if (idx == depth || idx == free_count()) {
      out.push_back(cur);
      return;
    }
    auto [r, c] = free_[idx];
    for (int v = 0; v < y_; ++v) {
      if (!allowed(r, c, v)) continue;
      place(r, c, v);
      cur.push_back(v);
      prefixes(idx + 1, depth, cap, cur, out);
      cur.pop_back();
      unplace(r, c);
    }
  }

  bool apply_prefix(const std::vector<int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      auto [r, c] = free_[i];
      if (!allowed(r, c, values[i])) return false;
      place(r, c, values[i]);
    }
    return true;
  }

  bool first_square(int idx, detail::Task& task) {
    if (idx == free_count()) return mates(task);
    auto [r, c] = free_[idx];
    for (int v = 0; v < y_; ++v) {
      if (!allowed(r, c, v)) continue;
      place(r, c, v);
      if (!task.visit([&] { return "L0(" + std::to_string(r) + "," + std::to_string(c) + ")=" + std::to_string(v); })) {
        unplace(r, c);
        return false;
      }
      if (first_square(idx + 1, task)) return true;
      unplace(r, c);
      if (task.stopped()) return false;
    }
    return false;
  }

  int cell(int r, int c) const { return r * y_ + c; }

  // Transversals of square 0: full classes meet every row and column and see
  // every symbol; hole classes avoid the hole lines and see the non-hole symbols.
  void transversals(bool hole, int r, std::vector<int>& col, std::vector<char>& cu, std::vector<char>& su,
                    std::vector<Transversal>& out) const {
    int rows = hole ? N_ : y_;
    if (r == rows) {
      Transversal tr{{}, col, hole};
      for (int i = 0; i < rows; ++i) tr.cells.set(cell(i, col[i]));
      out.push_back(std::move(tr));
      return;
    }
    for (int c = 0; c < (hole ? N_ : y_); ++c) {
      if (cu[c] || (in_hole(r) && in_hole(c))) continue;
      int v = sq_[0].at(r, c);
      if (su[v] || (hole && v >= N_)) continue;
      cu[c] = su[v] = 1;
      col[r] = c;
      transversals(hole, r + 1, col, cu, su, out);
      cu[c] = su[v] = 0;
    }
    col[r] = -1;
  }

  bool consistent(const Transversal& tr, int q) const {
    std::vector<char> seen(y_);
    for (int r = 0; r < y_; ++r) {
      if (tr.col[r] < 0) continue;
      int v = sq_[q].at(r, tr.col[r]);
      if (seen[v] || (tr.hole && v >= N_)) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool mates(detail::Task& task) {
    std::vector<Transversal> all;
    std::vector<int> col(y_, -1);
    std::vector<char> cu(y_), su(y_);
    transversals(false, 0, col, cu, su, all);
    if (a_ > 0) transversals(true, 0, col, cu, su, all);
    return mate(1, all, task);
  }

  bool mate(int q, const std::vector<Transversal>& pool, detail::Task& task) {
    if (q == t_) return true;
    std::vector<const Transversal*> usable;
    for (const auto& tr : pool) {
      bool ok = true;
      for (int p = 1; p < q && ok; ++p) ok = consistent(tr, p);
      if (ok) usable.push_back(&tr);
    }
    std::vector<std::vector<const Transversal*>> by_cell(y_ * y_);
    for (const auto* tr : usable)
      for (int r = 0; r < y_; ++r)
        if (tr->col[r] >= 0) {
          by_cell[cell(r, tr->col[r])].push_back(tr);
          break;
        }
    CellSet covered;
    for (int r = N_; r < y_; ++r)
      for (int c = N_; c < y_; ++c) covered.set(cell(r, c));
    std::vector<const Transversal*> chosen;
    return cover(q, covered, chosen, by_cell, pool, task);
  }

  // Each transversal is indexed under its first cell, so the class holding the
  // first uncovered cell is found there.
  bool cover(int q, CellSet& covered, std::vector<const Transversal*>& chosen,
             const std::vector<std::vector<const Transversal*>>& by_cell, const std::vector<Transversal>& pool,
             detail::Task& task) {
    int first = -1;
    for (int i = 0; i < y_ * y_; ++i)
      if (!covered.test(i)) {
        first = i;
        break;
      }
    if (first < 0) {
      label(q, chosen);
      return mate(q + 1, pool, task);
    }
    int full = 0, holes = 0;
    for (const auto* tr : chosen) (tr->hole ? holes : full) += 1;
    for (const auto* tr : by_cell[first]) {
      if ((tr->cells & covered).any()) continue;
      if (tr->hole ? holes >= a_ : full >= N_) continue;
      if (!task.visit([&] { return "T" + std::to_string(q) + " " + std::to_string(chosen.size()) + " @" + std::to_string(first); }))
        return false;
      covered |= tr->cells;
      chosen.push_back(tr);
      if (cover(q, covered, chosen, by_cell, pool, task)) return true;
      chosen.pop_back();
      covered &= ~tr->cells;
      if (task.stopped()) return false;
    }
    return false;
  }

  void label(int q, const std::vector<const Transversal*>& chosen) {
    latin::Square sq(y_);
    int next_full = 0, next_hole = N_;
    for (const auto* tr : chosen) {
      int v = tr->hole ? next_hole++ : next_full++;
      for (int r = 0; r < y_; ++r)
        if (tr->col[r] >= 0) sq.at(r, tr->col[r]) = v;
    }
    sq_[q] = std::move(sq);
  }

  latin::ImolsSet result() const {
    latin::ImolsSet m{y_, {{}}, sq_};
    for (int i = N_; i < y_; ++i) m.holes[0].push_back(i);
    if (a_ == 0) m.holes.clear();
    return m;
  }

 private:
  int y_, a_, N_, t_;
  std::vector<latin::Square> sq_;
  std::vector<std::vector<char>> rowu_, colu_;
  std::vector<Cell> free_;
};

latin::ImolsSet checked(latin::ImolsSet m) {
  auto rep = latin::verify_imols(m);
  if (!rep.ok()) fail(ErrorKind::InvalidDesign, "IMOLS search produced an invalid witness: " + rep.summary());
  return m;
}

std::filesystem::path cache_file(int y, int a, int t) {
  return cache_dir() / ("imols_" + std::to_string(y) + "_" + std::to_string(a) + "_" + std::to_string(t) + ".json");
}

std::optional<latin::ImolsSet> read_cache(int y, int a, int t) {
  std::ifstream in(cache_file(y, a, t));
  if (!in) return std::nullopt;
  try {
    auto m = latin::imols_from_json(nlohmann::json::parse(in));
    if (m.order == y && m.hole_size() == a && m.count() == t && latin::verify_imols(m).ok()) return m;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

void write_cache(const latin::ImolsSet& m, int y, int a, int t) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir(), ec);
  auto path = cache_file(y, a, t);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << latin::to_json(m).dump() << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

SearchResult<latin::ImolsSet> search_imols_cyclic(int y, int a, int t, const SearchBudget& budget) {
  using Result = latin::ImolsSet;
  const int n = y - a;
  if (t < 1 || a < 0 || n < 1 || a > n) return {Status::ProvenEmpty, std::nullopt, 0, {}};
  CyclicSearch root(n, a, t);
  std::vector<std::vector<CyclicSearch::Move>> tasks;
  std::vector<CyclicSearch::Move> cur;
  std::vector<int> undo;
  root.prefixes(0, std::min(3, root.var_count()), cur, tasks, undo);
  std::function<std::optional<Result>(int, detail::Task&)> body = [&](int i, detail::Task& task) -> std::optional<Result> {
    CyclicSearch s(n, a, t);
    std::vector<int> u;
    for (const auto& mv : tasks[i]) s.apply(mv.var, mv.value, u);
    if (!task.visit([&] { return "root " + std::to_string(i); })) return std::nullopt;
    if (!s.dfs(static_cast<int>(tasks[i].size()), task, u)) return std::nullopt;
    return checked(s.to_imols());
  };
  return detail::run_tasks<Result>(static_cast<int>(tasks.size()), budget, body);
}

SearchResult<latin::ImolsSet> search_imols_general(int y, int a, int t, const SearchBudget& budget) {
  using Result = latin::ImolsSet;
  if (y > kMaxOrder) fail(ErrorKind::Precondition, "general IMOLS search handles orders up to 16");
  if (t < 1 || a < 0 || 2 * a > y || y < 1) return {Status::ProvenEmpty, std::nullopt, 0, {}};
  // Root tasks are the square-0 prefixes of the shallowest depth giving
  // enough of them; the depth depends on (y, a) only.
  constexpr std::size_t kWanted = 256, kCap = 4096;
  GeneralSearch root(y, a, t);
  std::vector<std::vector<int>> tasks{{}};
  for (int depth = 1; depth <= root.free_count() && tasks.size() < kWanted; ++depth) {
    std::vector<std::vector<int>> next;
    std::vector<int> cur;
    root.prefixes(0, depth, kCap, cur, next);
    if (next.size() > kCap) break;
    tasks = std::move(next);
  }
  std::function<std::optional<Result>(int, detail::Task&)> body = [&](int i, detail::Task& task) -> std::optional<Result> {
    GeneralSearch s(y, a, t);
    s.apply_prefix(tasks[i]);
    if (!task.visit([&] { return "root " + std::to_string(i); })) return std::nullopt;
    if (!s.first_square(static_cast<int>(tasks[i].size()), task)) return std::nullopt;
    return checked(s.result());
  };
  return detail::run_tasks<Result>(static_cast<int>(tasks.size()), budget, body);
}

SearchResult<latin::ImolsSet> search_imols(int y, int a, int t, const SearchBudget& budget) {
  if (a == 0 && latin::prime_power(y) && t <= y - 1) {
    auto m = checked(latin::as_imols(latin::mols_from_field(y, t)));
    return {Status::Found, std::move(m), 0, {"field " + std::to_string(y)}};
  }
  if (auto cached = read_cache(y, a, t)) return {Status::Found, std::move(cached), 0, {"cache"}};
  SearchResult<latin::ImolsSet> res;
  if (a > 0) {
    res = search_imols_cyclic(y, a, t, budget);
    if (res.status != Status::Found) {
      auto general = search_imols_general(y, a, t, budget);
      general.nodes += res.nodes;
      res = std::move(general);
    }
  } else {
    res = search_imols_general(y, a, t, budget);
  }
  if (y < 4 * a) res.transcript.insert(res.transcript.begin(), "note: y < 4a lies outside the existence lemma");
  if (res.witness) write_cache(*res.witness, y, a, t);
  return res;
}

}  // namespace ghd::search
