#pragma once

#include <cstdint>

#include "oia/exact_int.hpp"

namespace oia {

/// 2-adic valuation: the exponent of the largest power of 2 dividing k.
/// Rejects k = 0 (valuation undefined).
uint32_t v2(const ExactInt& k);

/// The 2-part of k, i.e. 2^v2(k).
ExactInt two_part(const ExactInt& k);

/// k split as odd_part * 2^valuation with odd_part odd.
struct TwoAdic {
  uint32_t valuation = 0;
  ExactInt odd_part;

  static TwoAdic of(const ExactInt& k);
  ExactInt recombine() const;
};

/// Binary dominance m <= n digit-wise: every base-2 digit of m is at most
/// the corresponding digit of n. Implemented as the bitwise test
/// (m & ~n) == 0, which is the digit-wise comparison in one step.
constexpr bool dominates(uint64_t m, uint64_t n) noexcept { return (m & ~n) == 0; }

/// Exact binomial coefficient C(n, m); m > n is an error.
ExactInt binomial(uint32_t n, uint32_t m);

/// Exact Gaussian binomial: the number of m-dimensional subspaces of an
/// n-dimensional space over a field with q elements,
///   prod_{i=0}^{m-1} (q^{n-i} - 1) / (q^{i+1} - 1).
/// Every intermediate division is checked to be exact.
ExactInt gaussian_binomial(uint32_t n, uint32_t m, const ExactInt& q);

/// v2(t!) via Legendre: t minus the number of set bits of t.
uint64_t factorial_v2(uint64_t t) noexcept;

struct PrimePower {
  uint64_t p = 0;
  uint32_t exponent = 0;
};

/// Factor q as p^a for an odd prime p. Distinct errors for q even, q < 3,
/// and q not a prime power. Trial division; inputs are desk-scale.
PrimePower factor_prime_power(uint64_t q);

/// Trial-division primality for desk-scale q.
bool is_prime(uint64_t q) noexcept;

}  // namespace oia
