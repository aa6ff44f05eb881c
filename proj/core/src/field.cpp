#include "ghd/field.hpp"

#include "ghd/error.hpp"

namespace ghd::latin {

namespace {

using Poly = std::vector<int>;  // constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly rem(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
    int shift = static_cast<int>(f.size()) - 1 - dg;
    int c = f.back();
    for (int i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    trim(f);
  }
  return f;
}

Poly from_index(long long value, int p, int digits) {
  Poly f(digits);
  for (int i = 0; i < digits; ++i) {
    f[i] = static_cast<int>(value % p);
    value /= p;
  }
  return f;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::optional<PrimePower> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return PrimePower{q, 1};
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, e};
}

std::vector<int> irreducible_modulus(int p, int e) {
  if (e == 1) return {0, 1};
  for (long long low = 0; low < ipow(p, e); ++low) {
    Poly f = from_index(low, p, e);
    f.push_back(1);
    if (f[0] == 0) continue;
    bool irreducible = true;
    for (int d = 1; d <= e / 2 && irreducible; ++d)
      for (long long gl = 0; gl < ipow(p, d) && irreducible; ++gl) {
        Poly g = from_index(gl, p, d);
        g.push_back(1);
        if (rem(f, g, p).empty()) irreducible = false;
      }
    if (irreducible) return f;
  }
  fail(ErrorKind::NotPrimePower, "no irreducible polynomial found");
}

GaloisField::GaloisField(int q) : q_(q) {
  auto pp = prime_power(q);
  if (!pp) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > (1 << 14)) fail(ErrorKind::TooMany, "field order above 2^14");
  p_ = pp->p;
  e_ = pp->e;
  modulus_ = irreducible_modulus(p_, e_);

  auto mul_slow = [&](int a, int b) {
    Poly fa = from_index(a, p_, e_), fb = from_index(b, p_, e_);
    Poly prod(2 * e_, 0);
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
    Poly r = rem(prod, modulus_, p_);
    int v = 0;
    for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) v = v * p_ + r[i];
    return v;
  };

  log_.assign(q_, -1);
  exp_.assign(2 * q_, 0);
  for (int g = 2; g <= q_; ++g) {
    int gen = g == q_ ? 1 : g;  // q = 2 has generator 1
    std::fill(log_.begin(), log_.end(), -1);
    int x = 1, k = 0;
    bool ok = true;
    do {
      if (log_[x] != -1) {
        ok = false;
        break;
      }
      log_[x] = k;
      exp_[k] = x;
      x = mul_slow(x, gen);
      ++k;
    } while (x != 1);
    if (ok && k == q_ - 1) break;
  }
  for (int k = q_ - 1; k < 2 * q_; ++k) exp_[k] = exp_[k - (q_ - 1)];
}

int GaloisField::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int r = 0, place = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

int GaloisField::neg(int a) const {
  if (p_ == 2) return a;
  int r = 0, place = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

int GaloisField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

int GaloisField::inv(int a) const {
  if (a == 0) fail(ErrorKind::Precondition, "zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

}  // namespace ghd::latin
