#include "search_internal.hpp"

#include "ghd/error.hpp"
#include "ghd/verify.hpp"

namespace ghd::search {

namespace {

constexpr int kMaxSide = 6;

// Row-by-row fill. Within a row the block holding the smallest uncovered
// symbol is chosen next, together with its column.
class ExhaustiveSearch {
 public:
  ExhaustiveSearch(int s, int v)
      : s_(s), v_(v), n_(v / 3), cells_(s * s), pair_(v * v), in_col_(s, std::vector<char>(v)), filled_(s),
        in_row_(v) {
    for (int j = 0; j < n_; ++j) put(0, j, {3 * j, 3 * j + 1, 3 * j + 2});
    std::fill(in_row_.begin(), in_row_.end(), 0);
  }

  using Triple = std::array<int, 3>;
  struct Move {
    int col;
    Triple t;
  };

  bool pair_free(int a, int b) const { return !pair_[a * v_ + b]; }

  std::vector<Move> options(int r) const {
    std::vector<Move> out;
    int x = -1;
    for (int i = 0; i < v_ && x < 0; ++i)
      if (!in_row_[i]) x = i;
    for (int y = x + 1; y < v_; ++y) {
      if (in_row_[y] || !pair_free(x, y)) continue;
      for (int z = y + 1; z < v_; ++z) {
        if (in_row_[z] || !pair_free(x, z) || !pair_free(y, z)) continue;
        for (int c = 0; c < s_; ++c) {
          if (x == 0 && c != r) continue;
          if (cells_[r * s_ + c] || filled_[c] >= n_) continue;
          if (in_col_[c][x] || in_col_[c][y] || in_col_[c][z]) continue;
          out.push_back({c, {x, y, z}});
        }
      }
    }
    return out;
  }

  void put(int r, int c, const Triple& t) {
    cells_[r * s_ + c] = 1;
    blocks_.push_back({r, c, t});
    ++filled_[c];
    for (int i = 0; i < 3; ++i) {
      in_row_[t[i]] = 1;
      in_col_[c][t[i]] = 1;
      for (int j = 0; j < 3; ++j)
        if (i != j) pair_[t[i] * v_ + t[j]] = 1;
    }
  }

  void take(int r, int c, const Triple& t) {
    cells_[r * s_ + c] = 0;
    blocks_.pop_back();
    --filled_[c];
    for (int i = 0; i < 3; ++i) {
      in_row_[t[i]] = 0;
      in_col_[c][t[i]] = 0;
      for (int j = 0; j < 3; ++j)
        if (i != j) pair_[t[i] * v_ + t[j]] = 0;
    }
  }

  // Every column must still be able to reach n blocks.
  bool columns_reachable(int r) const {
    const int rows_after = s_ - r - 1;
    for (int c = 0; c < s_; ++c) {
      int in_this_row = cells_[r * s_ + c];
      if (filled_[c] + rows_after + (in_this_row ? 0 : 1) < n_) return false;
    }
    return true;
  }

  bool row(int r, int placed, detail::Task& task) {
    if (r == s_) return true;
    if (placed == n_) {
      // A new row starts; columns that missed this row need the later ones.
      for (int c = 0; c < s_; ++c)
        if (filled_[c] + (s_ - r - 1) < n_) return false;
      std::fill(in_row_.begin(), in_row_.end(), 0);
      bool ok = row(r + 1, 0, task);
      if (!ok) restore_row(r);
      return ok;
    }
    if (!columns_reachable(r)) return false;
    for (const auto& m : options(r)) {
      put(r, m.col, m.t);
      if (!task.visit([&] { return describe(r, m); })) {
        take(r, m.col, m.t);
        return false;
      }
      if (row(r, placed + 1, task)) return true;
      take(r, m.col, m.t);
      if (task.stopped()) return false;
    }
    return false;
  }

  void restore_row(int r) {
    std::fill(in_row_.begin(), in_row_.end(), 0);
    for (const auto& b : blocks_)
      if (b.r == r)
        for (int x : b.t) in_row_[x] = 1;
  }

  std::string describe(int r, const Move& m) const {
    return "R" + std::to_string(r) + " c" + std::to_string(m.col) + " " + std::to_string(m.t[0]) + "," +
           std::to_string(m.t[1]) + "," + std::to_string(m.t[2]);
  }

  GhdArray build() const {
    std::vector<Label> labels;
    for (int i = 0; i < v_; ++i) labels.push_back(PlainLabel{std::to_string(i)});
    GridBuilder gb(s_, make_symbols(labels));
    for (const auto& b : blocks_)
      gb.place(b.r, b.c,
               Block({static_cast<SymbolId>(b.t[0]), static_cast<SymbolId>(b.t[1]), static_cast<SymbolId>(b.t[2])}));
    return gb.build();
  }

  struct Placed {
    int r, c;
    Triple t;
  };

  int s_, v_, n_;
  std::vector<char> cells_, pair_;
  std::vector<std::vector<char>> in_col_;
  std::vector<int> filled_;
  std::vector<char> in_row_;
  std::vector<Placed> blocks_;
};

}  // namespace

ExhaustiveResult exhaustive_ghd(int s, int v, const SearchBudget& budget, bool allow_long) {
  ExhaustiveResult out;
  if (s < 1 || v < 0 || v % 3 != 0) {
    out.existence = Existence::Empty;
    out.transcript.push_back("necessary conditions fail");
    return out;
  }
  if (v == 0) {
    out.existence = Existence::Exists;
    out.witness = GridBuilder(s, {}).build();
    return out;
  }
  if (v / 3 > s || 2 * s > v - 1) {
    out.existence = Existence::Empty;
    out.transcript.push_back("necessary conditions fail");
    return out;
  }
  if (s > kMaxSide || (s == 6 && v == 15 && !allow_long)) {
    out.transcript.push_back("outside the exhaustive range");
    return out;
  }
  ExhaustiveSearch root(s, v);
  if (s == 1) {
    out.existence = Existence::Exists;
    out.witness = root.build();
    return out;
  }
  const auto opts = root.options(1);
  std::function<std::optional<GhdArray>(int, detail::Task&)> body = [&](int i, detail::Task& task) -> std::optional<GhdArray> {
    ExhaustiveSearch e(s, v);
    e.put(1, opts[i].col, opts[i].t);
    if (!task.visit([&] { return "root " + std::to_string(i); })) return std::nullopt;
    if (!e.row(1, 1, task)) return std::nullopt;
    GhdArray g = e.build();
    if (!verify_ghd(g).ok()) fail(ErrorKind::InvalidDesign, "exhaustive search produced an invalid design");
    return g;
  };
  auto res = detail::run_tasks<GhdArray>(static_cast<int>(opts.size()), budget, body);
  out.existence = res.status == Status::Found         ? Existence::Exists
                  : res.status == Status::ProvenEmpty ? Existence::Empty
                                                      : Existence::Unknown;
  out.witness = std::move(res.witness);
  out.nodes = res.nodes;
  out.transcript = std::move(res.transcript);
  return out;
}

}  // namespace ghd::search
