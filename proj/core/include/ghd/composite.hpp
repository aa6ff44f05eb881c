#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "ghd/design.hpp"
#include "ghd/latin.hpp"

namespace ghd::composite {

// A GHD* in diagonal form. Non-hole symbol (x, c) has id x(k-1) + c and
// label x_c; the hole is inf0 (the designated infinity, id s(k-1)) followed
// by inf1.. in order. Cell (x, x) holds {inf0, (x,0), .., (x,k-2)}.
struct NormalizedStar {
  GhdArray base;
  std::vector<SymbolId> hole;

  int side() const { return base.side(); }
  int u() const { return static_cast<int>(hole.size()) - 1; }
  SymbolId pair_label(int x, int c) const { return static_cast<SymbolId>(x * (base.params().k - 1) + c); }
};

struct StarDesign {
  GhdArray design;
  std::vector<SymbolId> hole;
};

NormalizedStar normalize_star(const GhdArray& g, const std::vector<SymbolId>& hole, SymbolId infinity);

// u_i per resolution class, in class order.
using ClassWeights = std::vector<int>;

// (block size, u_B) -> ingredient; throws MissingIngredient when it has none.
using StarSupplier = std::function<NormalizedStar(int size, int u)>;

StarDesign stinson_compose(const latin::ResolvablePbd& pbd, const ClassWeights& weights, const StarSupplier& supplier);

// RTD(n, g) from n-1 MOLS(g), its groups added as a final class.
StarDesign stinson_rtd(int n, int g, const ClassWeights& u, const StarSupplier& supplier);

// Ingredients by (side, u), with GHD*(q, 3q) from 3 MOLS(q) for prime powers
// q >= 4 built on demand.
class StarLibrary {
 public:
  void add(NormalizedStar star);
  bool has(int size, int u) const;
  NormalizedStar get(int size, int u) const;
  StarSupplier supplier() const;

 private:
  mutable std::map<std::pair<int, int>, NormalizedStar> stars_;
};

// Superimposed 3 MOLS(q) with the symbols of the first square as hole.
NormalizedStar mols_star(int q);

enum class Power2Lemma { Lemma51, Lemma52 };

// Weights for RTD(8, 2^(m-3)): 7 on the first g-1 classes, 4 (Lemma51) or
// 1 (Lemma52) on class g, g-1 on the groups.
ClassWeights power2_weights(Power2Lemma which, int m);
// GHD*(2^m, 3*2^m - 3) or GHD*(2^m, 3*2^m - 6).
StarDesign power2_recipe(Power2Lemma which, int m, const StarLibrary& library);

// Weight arithmetic for the affine-plane recipes (affine plane of order 2^m, side
// 2^(2m), m >= 7 odd): x classes with u = 1, y with u = 2^m - 1, the rest
// with u = 2^m - 7.
using Rational = boost::rational<long long>;
Rational weight_bound_A(int m);
Rational weight_bound_A_prime(int m);
Rational affine_x0(int m);
// 3*4^m - 6(1 + 2^m) - x(2^m - 8) + 6y
long long affine_point_count(int m, long long x, long long y);
// Weights giving 3*4^m - 6 alpha points, or 3*4^m - 6 alpha + 3 when `odd`
// (one remaining class at u = 2^m - 4); nullopt if no x, y fit.
std::optional<ClassWeights> affine_weights(int m, long long alpha, bool odd);

}  // namespace ghd::composite
