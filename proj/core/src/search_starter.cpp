#include "search_internal.hpp"

#include "ghd/error.hpp"

namespace ghd::search {

namespace {

using starter::Point;
using starter::Triple;

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string tok(const Point& p) {
  return p.infinite ? "inf" + std::to_string(p.value) : std::to_string(p.value) + "_" + std::to_string(p.level);
}

// Pure and mixed differences over Z_g with `levels` copies; every change is
// logged so it can be undone.
class DiffSet {
 public:
  DiffSet(int g, int levels) : g_(g), levels_(levels), used_(static_cast<std::size_t>(levels) * levels * g) {}

  bool add_pair(const Point& p, const Point& q, std::vector<int>& marked) {
    if (p.infinite || q.infinite) return true;
    if (p.level == q.level) {
      int d = mod(p.value - q.value, g_), e = mod(q.value - p.value, g_);
      int base = (p.level * levels_ + p.level) * g_;
      if (d == e || used_[base + d] || used_[base + e]) return false;
      mark(base + d, marked);
      mark(base + e, marked);
      return true;
    }
    const Point& a = p.level < q.level ? p : q;
    const Point& b = p.level < q.level ? q : p;
    int idx = (a.level * levels_ + b.level) * g_ + mod(a.value - b.value, g_);
    if (used_[idx]) return false;
    mark(idx, marked);
    return true;
  }

  bool add_block(const Triple& t, std::vector<int>& marked) {
    std::size_t start = marked.size();
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!add_pair(t[i], t[j], marked)) {
          undo(marked, start);
          return false;
        }
    return true;
  }

  void undo(std::vector<int>& marked, std::size_t to) {
    while (marked.size() > to) {
      used_[marked.back()] = 0;
      marked.pop_back();
    }
  }

 private:
  void mark(int idx, std::vector<int>& marked) {
    used_[idx] = 1;
    marked.push_back(idx);
  }
  int g_, levels_;
  std::vector<char> used_;
};

// ---- transitive ---------------------------------------------------------

class TransitiveSearch {
 public:
  TransitiveSearch(int n, int x) : n_(n), x_(x), g_(n + x), inf_(n - 2 * x), cov_(2 * g_), tcov_(2 * g_), diffs_(g_, 2), adder_used_(g_) {}

  struct Option {
    Triple t;
  };

  int first_uncovered() const {
    for (int i = 0; i < 2 * g_; ++i)
      if (!cov_[i]) return i;
    return -1;
  }

  std::vector<Option> options(int idx) {
    std::vector<Option> out;
    Point p = pt(idx);
    if (p.level == 0 && infs_ < inf_)
      for (int r = 0; r < g_; ++r)
        if (!cov_[g_ + r]) out.push_back({{Point::inf(infs_), p, Point::finite(r, 1)}});
    if (triples_ < 2 * x_)
      for (int a = idx + 1; a < 2 * g_; ++a) {
        if (cov_[a]) continue;
        for (int b = a + 1; b < 2 * g_; ++b)
          if (!cov_[b]) out.push_back({{p, pt(a), pt(b)}});
      }
    return out;
  }

  bool apply(const Option& o, std::vector<int>& marked) {
    if (!diffs_.add_block(o.t, marked)) return false;
    for (const auto& q : o.t)
      if (!q.infinite) cov_[slot(q)] = 1;
    if (o.t[0].infinite) ++infs_;
    else ++triples_;
    blocks_.push_back(o.t);
    return true;
  }

  void undo(const Option& o, std::vector<int>& marked, std::size_t to) {
    diffs_.undo(marked, to);
    for (const auto& q : o.t)
      if (!q.infinite) cov_[slot(q)] = 0;
    if (o.t[0].infinite) --infs_;
    else --triples_;
    blocks_.pop_back();
  }

  bool feasible() const {
    int free0 = 0, free1 = 0;
    for (int r = 0; r < g_; ++r) {
      free0 += !cov_[r];
      free1 += !cov_[g_ + r];
    }
    int need = inf_ - infs_;
    return free0 >= need && free1 >= need;
  }

  std::optional<starter::TransitiveStarterAdder> dfs(detail::Task& task, std::vector<int>& marked) {
    int idx = first_uncovered();
    if (idx < 0) return adders(task);
    if (!feasible()) return std::nullopt;
    for (const auto& o : options(idx)) {
      std::size_t mark = marked.size();
      if (!apply(o, marked)) continue;
      if (!task.visit([&] { return describe(o.t); })) {
        undo(o, marked, mark);
        return std::nullopt;
      }
      if (auto w = dfs(task, marked)) return w;
      undo(o, marked, mark);
      if (task.stopped()) return std::nullopt;
    }
    return std::nullopt;
  }

  std::string describe(const Triple& t) const {
    return "S" + std::to_string(blocks_.size()) + " " + tok(t[0]) + " " + tok(t[1]) + " " + tok(t[2]);
  }

  // Exact cover of the translated points by B_j + a_j with distinct a_j.
  std::optional<starter::TransitiveStarterAdder> adders(detail::Task& task) {
    std::vector<int> adder(blocks_.size(), -1);
    std::fill(tcov_.begin(), tcov_.end(), 0);
    std::fill(adder_used_.begin(), adder_used_.end(), 0);
    if (assign(task, adder)) {
      starter::TransitiveStarterAdder sa{n_, x_, {}, {}, 0};
      for (std::size_t j = 0; j < blocks_.size(); ++j) sa.blocks.push_back({blocks_[j], adder[j]});
      return sa;
    }
    return std::nullopt;
  }

  bool assign(detail::Task& task, std::vector<int>& adder) {
    int q = -1;
    for (int i = 0; i < 2 * g_ && q < 0; ++i)
      if (!tcov_[i]) q = i;
    if (q < 0) return true;
    Point target = pt(q);
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
      if (adder[j] != -1) continue;
      for (const auto& p : blocks_[j]) {
        if (p.infinite || p.level != target.level) continue;
        int a = mod(target.value - p.value, g_);
        if (adder_used_[a]) continue;
        bool clear = true;
        for (const auto& r : blocks_[j])
          if (!r.infinite && tcov_[slot(Point::finite(mod(r.value + a, g_), r.level))]) clear = false;
        if (!clear) continue;
        if (!task.visit([&] { return "A" + std::to_string(j) + " " + std::to_string(a); })) return false;
        for (const auto& r : blocks_[j])
          if (!r.infinite) tcov_[slot(Point::finite(mod(r.value + a, g_), r.level))] = 1;
        adder[j] = a;
        adder_used_[a] = 1;
        if (assign(task, adder)) return true;
        for (const auto& r : blocks_[j])
          if (!r.infinite) tcov_[slot(Point::finite(mod(r.value + a, g_), r.level))] = 0;
        adder[j] = -1;
        adder_used_[a] = 0;
        if (task.stopped()) return false;
      }
    }
    return false;
  }

  Point pt(int idx) const { return Point::finite(idx % g_, idx / g_); }
  int slot(const Point& p) const { return p.level * g_ + p.value; }

 private:
  int n_, x_, g_, inf_;
  std::vector<char> cov_, tcov_;
  DiffSet diffs_;
  std::vector<char> adder_used_;
  std::vector<Triple> blocks_;
  int infs_ = 0, triples_ = 0;
};

// ---- intransitive -------------------------------------------------------

class IntransitiveSearch {
 public:
  IntransitiveSearch(int n, int x) : n_(n), x_(x), cov_(3 * n), tcov_(3 * n), diffs_(n, 3), adder_used_(n) {}

  struct Option {
    Triple t;
    bool border;  // R in the first phase, C in the second
  };

  Point pt(int idx) const { return Point::finite(idx % n_, idx / n_); }
  int slot(const Point& p) const { return p.level * n_ + p.value; }
  static bool one_per_level(const Triple& t) {
    return t[0].level != t[1].level && t[0].level != t[2].level && t[1].level != t[2].level;
  }

  std::optional<starter::IntransitiveStarterAdder> dfs(detail::Task& task, std::vector<int>& marked) {
    int idx = -1;
    for (int i = 0; i < 3 * n_ && idx < 0; ++i)
      if (!cov_[i]) idx = i;
    if (idx < 0) return second_phase(task, marked);
    for (const auto& o : options(idx, cov_, static_cast<int>(S_.size()) < n_ - x_, static_cast<int>(R_.size()) < x_)) {
      std::size_t mark = marked.size();
      if (!diffs_.add_block(o.t, marked)) continue;
      if (!task.visit([&] { return describe(o.border ? "R" : "S", o.t); })) {
        diffs_.undo(marked, mark);
        return std::nullopt;
      }
      set(cov_, o.t, 1);
      (o.border ? R_ : S_).push_back(o.t);
      if (auto w = dfs(task, marked)) return w;
      (o.border ? R_ : S_).pop_back();
      set(cov_, o.t, 0);
      diffs_.undo(marked, mark);
      if (task.stopped()) return std::nullopt;
    }
    return std::nullopt;
  }

  std::vector<Option> options(int idx, const std::vector<char>& cov, bool plain, bool border) const {
    std::vector<Option> out;
    Point p = pt(idx);
    for (int a = idx + 1; a < 3 * n_; ++a) {
      if (cov[a]) continue;
      for (int b = a + 1; b < 3 * n_; ++b) {
        if (cov[b]) continue;
        Triple t{p, pt(a), pt(b)};
        if (plain) out.push_back({t, false});
        if (border && one_per_level(t)) out.push_back({t, true});
      }
    }
    return out;
  }

  void set(std::vector<char>& cov, const Triple& t, char v) {
    for (const auto& q : t) cov[slot(q)] = v;
  }

  std::string describe(const char* what, const Triple& t) const {
    return std::string(what) + " " + tok(t[0]) + " " + tok(t[1]) + " " + tok(t[2]);
  }

  std::optional<starter::IntransitiveStarterAdder> second_phase(detail::Task& task, std::vector<int>& marked) {
    std::fill(tcov_.begin(), tcov_.end(), 0);
    std::fill(adder_used_.begin(), adder_used_.end(), 0);
    adder_.assign(S_.size(), -1);
    C_.clear();
    if (!cover(task, marked)) return std::nullopt;
    starter::IntransitiveStarterAdder sa{n_, x_, {}, R_, C_, {}};
    for (std::size_t j = 0; j < S_.size(); ++j) sa.S.push_back({S_[j], adder_[j]});
    return sa;
  }

  bool cover(detail::Task& task, std::vector<int>& marked) {
    int q = -1;
    for (int i = 0; i < 3 * n_ && q < 0; ++i)
      if (!tcov_[i]) q = i;
    if (q < 0) return true;
    Point target = pt(q);
    for (std::size_t j = 0; j < S_.size(); ++j) {
      if (adder_[j] != -1) continue;
      for (const auto& p : S_[j]) {
        if (p.level != target.level) continue;
        int a = mod(target.value - p.value, n_);
        if (adder_used_[a]) continue;
        Triple moved = S_[j];
        for (auto& r : moved) r.value = mod(r.value + a, n_);
        if (std::any_of(moved.begin(), moved.end(), [&](const Point& r) { return tcov_[slot(r)] != 0; })) continue;
        if (!task.visit([&] { return "A" + std::to_string(j) + " " + std::to_string(a); })) return false;
        set(tcov_, moved, 1);
        adder_[j] = a;
        adder_used_[a] = 1;
        if (cover(task, marked)) return true;
        set(tcov_, moved, 0);
        adder_[j] = -1;
        adder_used_[a] = 0;
        if (task.stopped()) return false;
      }
    }
    if (static_cast<int>(C_.size()) < x_)
      for (const auto& o : options(q, tcov_, false, true)) {
        std::size_t mark = marked.size();
        if (!diffs_.add_block(o.t, marked)) continue;
        if (!task.visit([&] { return describe("C", o.t); })) {
          diffs_.undo(marked, mark);
          return false;
        }
        set(tcov_, o.t, 1);
        C_.push_back(o.t);
        if (cover(task, marked)) return true;
        C_.pop_back();
        set(tcov_, o.t, 0);
        diffs_.undo(marked, mark);
        if (task.stopped()) return false;
      }
    return false;
  }

  int n_, x_;
  std::vector<char> cov_, tcov_;
  DiffSet diffs_;
  std::vector<char> adder_used_;
  std::vector<Triple> S_, R_, C_;
  std::vector<int> adder_;
};

}  // namespace

SearchResult<starter::TransitiveStarterAdder> search_transitive_starter(int n, int x, const SearchBudget& budget) {
  using Result = starter::TransitiveStarterAdder;
  if (n < 1 || x < 0 || n < 2 * x) return {Status::ProvenEmpty, std::nullopt, 0, {}};
  TransitiveSearch root(n, x);
  const auto opts = root.options(0);
  std::function<std::optional<Result>(int, detail::Task&)> body = [&](int i, detail::Task& task) -> std::optional<Result> {
    TransitiveSearch s(n, x);
    std::vector<int> marked;
    if (!s.apply(opts[i], marked)) return std::nullopt;
    if (!task.visit([&] { return "root " + std::to_string(i); })) return std::nullopt;
    auto w = s.dfs(task, marked);
    if (w && !starter::validate(*w).ok()) fail(ErrorKind::InvalidDesign, "transitive search produced an invalid starter");
    return w;
  };
  return detail::run_tasks<Result>(static_cast<int>(opts.size()), budget, body);
}

SearchResult<starter::IntransitiveStarterAdder> search_intransitive_starter(int n, int x, const SearchBudget& budget) {
  using Result = starter::IntransitiveStarterAdder;
  if (n < 1 || x < 0 || x > n) return {Status::ProvenEmpty, std::nullopt, 0, {}};
  IntransitiveSearch root(n, x);
  const auto opts = root.options(0, root.cov_, n - x > 0, x > 0);
  std::function<std::optional<Result>(int, detail::Task&)> body = [&](int i, detail::Task& task) -> std::optional<Result> {
    IntransitiveSearch s(n, x);
    std::vector<int> marked;
    const auto& o = opts[i];
    if (!s.diffs_.add_block(o.t, marked)) return std::nullopt;
    if (!task.visit([&] { return "root " + std::to_string(i); })) return std::nullopt;
    s.set(s.cov_, o.t, 1);
    (o.border ? s.R_ : s.S_).push_back(o.t);
    auto w = s.dfs(task, marked);
    if (w && !starter::validate(*w).ok()) fail(ErrorKind::InvalidDesign, "intransitive search produced an invalid starter");
    return w;
  };
  return detail::run_tasks<Result>(static_cast<int>(opts.size()), budget, body);
}

}  // namespace ghd::search
