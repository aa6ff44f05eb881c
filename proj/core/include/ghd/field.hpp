#pragma once

#include <optional>
#include <vector>

namespace ghd::latin {

struct PrimePower {
  int p = 0;
  int e = 0;
};

std::optional<PrimePower> prime_power(int q);

// Monic irreducible polynomial of degree e over GF(p), coefficients from the
// constant term up. Picks the one whose lower coefficients, read as a base-p
// number c_0 + c_1 p + ..., are smallest.
std::vector<int> irreducible_modulus(int p, int e);

// GF(q) for q = p^e <= 2^14. Elements are 0..q-1; element a stands for the
// polynomial with base-p digits of a as coefficients.
class GaloisField {
 public:
  explicit GaloisField(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;

 private:
  int q_, p_, e_;
  std::vector<int> modulus_;
  std::vector<int> log_, exp_;
};

}  // namespace ghd::latin
