#include "ghd/composite.hpp"

#include <algorithm>
#include <numeric>

#include "ghd/error.hpp"
#include "ghd/field.hpp"
#include "ghd/verify.hpp"

namespace ghd::composite {

NormalizedStar normalize_star(const GhdArray& g, const std::vector<SymbolId>& hole, SymbolId infinity) {
  if (!verify_ghd(g).ok()) fail(ErrorKind::InvalidDesign, "not a GHD");
  if (!verify_star(g, hole).ok()) fail(ErrorKind::InvalidDesign, "hole is not a star hole");
  if (std::find(hole.begin(), hole.end(), infinity) == hole.end())
    fail(ErrorKind::Precondition, "the designated infinity is not in the hole");
  const int s = g.side(), v = g.v(), k = g.params().k;

  std::vector<int> col_perm(s, -1);
  std::vector<SymbolId> sym_perm(v, 0);
  std::vector<char> labeled(v), in_hole(v);
  for (SymbolId h : hole) in_hole[h] = 1;
  for (int r = 0; r < s; ++r) {
    int where = -1;
    for (int c = 0; c < s && where < 0; ++c)
      if (const Cell& b = g.cell(r, c); b && b->contains(infinity)) where = c;
    if (where < 0) fail(ErrorKind::NotNormalizable, "row " + std::to_string(r) + " lacks the infinity");
    col_perm[where] = r;
    int next = 0;
    for (SymbolId x : *g.cell(r, where)) {
      if (x == infinity) continue;
      if (in_hole[x] || labeled[x]) fail(ErrorKind::NotNormalizable, "partners of the infinity overlap");
      labeled[x] = 1;
      sym_perm[x] = static_cast<SymbolId>(r * (k - 1) + next++);
    }
  }
  const SymbolId base = static_cast<SymbolId>(s * (k - 1));
  sym_perm[infinity] = base;
  std::vector<SymbolId> others;
  for (SymbolId h : hole)
    if (h != infinity) others.push_back(h);
  std::sort(others.begin(), others.end());
  for (std::size_t j = 0; j < others.size(); ++j) sym_perm[others[j]] = base + 1 + static_cast<SymbolId>(j);
  for (int x = 0; x < v; ++x)
    if (!in_hole[x] && !labeled[x]) fail(ErrorKind::NotNormalizable, "a non-hole symbol is never a partner of the infinity");

  std::vector<int> rows(s);
  std::iota(rows.begin(), rows.end(), 0);
  GhdArray moved = apply_relabeling(g, rows, col_perm, sym_perm);
  std::vector<Label> labels;
  for (int x = 0; x < s; ++x)
    for (int c = 0; c < k - 1; ++c) labels.push_back(FiniteLabel{x, c});
  for (std::size_t j = 0; j < hole.size(); ++j) labels.push_back(InfiniteLabel{static_cast<int>(j)});
  NormalizedStar out{GhdArray(s, make_symbols(labels), moved.cells(), g.params()), {}};
  for (std::size_t j = 0; j < hole.size(); ++j) out.hole.push_back(base + static_cast<SymbolId>(j));
  return out;
}

StarDesign stinson_compose(const latin::ResolvablePbd& pbd, const ClassWeights& weights, const StarSupplier& supplier) {
  const int v = pbd.v;
  if (weights.size() != pbd.classes.size())
    fail(ErrorKind::ClassMisalignment, std::to_string(weights.size()) + " weights for " +
                                           std::to_string(pbd.classes.size()) + " classes");
  if (std::any_of(weights.begin(), weights.end(), [](int u) { return u < 0; }))
    fail(ErrorKind::ClassMisalignment, "negative weight");
  std::vector<std::vector<int>> classes_of(pbd.blocks.size());
  for (std::size_t i = 0; i < pbd.classes.size(); ++i) {
    std::vector<int> seen(v);
    for (int bi : pbd.classes[i]) {
      if (bi < 0 || bi >= static_cast<int>(pbd.blocks.size())) fail(ErrorKind::ClassMisalignment, "class names a missing block");
      classes_of[bi].push_back(static_cast<int>(i));
      for (int x : pbd.blocks[bi]) ++seen[x];
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
      fail(ErrorKind::ClassMisalignment, "class " + std::to_string(i) + " is not a resolution class");
  }

  // Ingredient k decides the block size of the output.
  int k = -1;
  std::vector<SymbolId> class_offset(weights.size());
  int u = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    class_offset[i] = static_cast<SymbolId>(u);
    u += weights[i];
  }

  std::vector<Cell> cells(static_cast<std::size_t>(v) * v);
  std::vector<char> diag(v);
  SymbolId infinity = 0;
  for (std::size_t bi = 0; bi < pbd.blocks.size(); ++bi) {
    const auto& B = pbd.blocks[bi];
    int uB = 0;
    for (int c : classes_of[bi]) uB += weights[c];
    NormalizedStar ing = supplier(static_cast<int>(B.size()), uB);
    if (ing.side() != static_cast<int>(B.size()) || ing.u() != uB)
      fail(ErrorKind::MissingIngredient, "supplier returned the wrong ingredient for block " + std::to_string(bi));
    if (k == -1) {
      k = ing.base.params().k;
      infinity = static_cast<SymbolId>(v * (k - 1));
    } else if (ing.base.params().k != k) {
      fail(ErrorKind::MissingIngredient, "ingredients disagree on k");
    }
    const int km = k - 1;
    std::vector<SymbolId> map(ing.base.v());
    for (std::size_t x = 0; x < B.size(); ++x)
      for (int c = 0; c < km; ++c) map[x * km + c] = static_cast<SymbolId>(B[x] * km + c);
    map[ing.hole[0]] = infinity;
    std::size_t j = 1;
    for (int c : classes_of[bi])
      for (int t = 0; t < weights[c]; ++t) map[ing.hole[j++]] = infinity + 1 + class_offset[c] + t;
    for (std::size_t r = 0; r < B.size(); ++r)
      for (std::size_t c = 0; c < B.size(); ++c) {
        if (r == c && diag[B[r]]) continue;
        const Cell& b = ing.base.cell(static_cast<int>(r), static_cast<int>(c));
        if (!b) continue;
        std::vector<SymbolId> m;
        for (SymbolId x : *b) m.push_back(map[x]);
        auto& cell = cells[static_cast<std::size_t>(B[r]) * v + B[c]];
        if (cell) fail(ErrorKind::ClassMisalignment, "two blocks contain the same pair of points");
        cell = Block(std::move(m));
      }
    for (int x : B) diag[x] = 1;
  }
  if (k == -1) fail(ErrorKind::Precondition, "PBD without blocks");

  std::vector<Label> labels;
  for (int x = 0; x < v; ++x)
    for (int c = 0; c < k - 1; ++c) labels.push_back(FiniteLabel{x, c});
  labels.push_back(InfiniteLabel{0});
  for (int t = 0; t < u; ++t) labels.push_back(InfiniteLabel{t + 1});
  Params p;
  p.k = k;
  StarDesign out{GhdArray(v, make_symbols(labels), std::move(cells), p), {}};
  for (int t = 0; t <= u; ++t) out.hole.push_back(infinity + static_cast<SymbolId>(t));
  return out;
}

StarDesign stinson_rtd(int n, int g, const ClassWeights& u, const StarSupplier& supplier) {
  if (static_cast<int>(u.size()) != g + 1)
    fail(ErrorKind::ClassMisalignment, "need g + 1 = " + std::to_string(g + 1) + " weights");
  auto checked = [&](int size, int uB) {
    NormalizedStar s = supplier(size, uB);
    if (s.base.params().k != 3) fail(ErrorKind::Precondition, "RTD composition takes k = 3 ingredients");
    return s;
  };
  auto pbd = latin::pbd_from_rtd(latin::rtd_from_mols(latin::mols_from_field(g, n - 1)));
  return stinson_compose(pbd, u, checked);
}

void StarLibrary::add(NormalizedStar star) {
  auto key = std::make_pair(star.side(), star.u());
  stars_.insert_or_assign(key, std::move(star));
}

bool StarLibrary::has(int size, int u) const {
  if (stars_.count({size, u})) return true;
  return u == size - 1 && size >= 4 && latin::prime_power(size).has_value();
}

NormalizedStar StarLibrary::get(int size, int u) const {
  auto it = stars_.find({size, u});
  if (it != stars_.end()) return it->second;
  if (u == size - 1 && size >= 4 && latin::prime_power(size).has_value()) {
    auto star = mols_star(size);
    stars_.emplace(std::make_pair(size, u), star);
    return star;
  }
  fail(ErrorKind::MissingIngredient, "GHD*(" + std::to_string(size) + "," + std::to_string(2 * size + 1 + u) + ")");
}

StarSupplier StarLibrary::supplier() const {
  return [this](int size, int u) { return get(size, u); };
}

NormalizedStar mols_star(int q) {
  auto m = latin::mols_from_field(q, 3);
  GhdArray g = latin::superimpose(m);
  auto hole = latin::superimposed_group(m, 0);
  return normalize_star(g, hole, hole.front());
}

ClassWeights power2_weights(Power2Lemma which, int m) {
  if (m < 6) fail(ErrorKind::Precondition, "the power-of-two recipes need m >= 6");
  const int g = 1 << (m - 3);
  ClassWeights u(g - 1, 7);
  u.push_back(which == Power2Lemma::Lemma51 ? 4 : 1);
  u.push_back(g - 1);
  return u;
}

StarDesign power2_recipe(Power2Lemma which, int m, const StarLibrary& library) {
  auto u = power2_weights(which, m);
  const int g = 1 << (m - 3);
  return stinson_rtd(8, g, u, library.supplier());
}

Rational weight_bound_A(int m) {
  long long p = 1LL << m;
  return Rational(5, 36) * p * p + Rational(5, 18) * p - Rational(19, 9);
}

Rational weight_bound_A_prime(int m) {
  long long p = 1LL << m;
  return Rational(5, 36) * p * p + Rational(1, 9) * p - Rational(23, 18);
}

Rational affine_x0(int m) { return Rational(5, 6) * (1LL << m) + Rational(4, 3); }

long long affine_point_count(int m, long long x, long long y) {
  long long p = 1LL << m;
  return 3 * p * p - 6 * (1 + p) - x * (p - 8) + 6 * y;
}

std::optional<ClassWeights> affine_weights(int m, long long alpha, bool odd) {
  const long long p = 1LL << m;
  // The odd variant's extra 3 points come from the class at 2^m - 4.
  const long long target = 3 * p * p - 6 * alpha;
  for (long long x = 0; x <= p + 1; ++x) {
    long long diff = target - affine_point_count(m, x, 0);
    if (diff < 0 || diff % 6) continue;
    long long y = diff / 6;
    long long rest = p + 1 - x - y;
    if (rest < (odd ? 1 : 0)) continue;
    ClassWeights u;
    u.insert(u.end(), x, 1);
    u.insert(u.end(), y, static_cast<int>(p - 1));
    if (odd) {
      u.push_back(static_cast<int>(p - 4));
      --rest;
    }
    u.insert(u.end(), rest, static_cast<int>(p - 7));
    return u;
  }
  return std::nullopt;
}

}  // namespace ghd::composite
