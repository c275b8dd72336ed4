#include "oia/arith.hpp"

#include <bit>
#include <stdexcept>

namespace oia {

uint32_t v2(const ExactInt& k) {
  if (k.is_zero()) throw std::invalid_argument("v2: undefined for 0");
  return k.trailing_zero_bits();
}

ExactInt two_part(const ExactInt& k) { return ExactInt::power_of_two(v2(k)); }

TwoAdic TwoAdic::of(const ExactInt& k) {
  TwoAdic out;
  out.valuation = v2(k);
  out.odd_part = k >> out.valuation;
  return out;
}

ExactInt TwoAdic::recombine() const { return odd_part << valuation; }

ExactInt binomial(uint32_t n, uint32_t m) {
  if (m > n) throw std::invalid_argument("binomial: m > n");
  if (m > n - m) m = n - m;
  ExactInt acc(1);
  for (uint32_t i = 0; i < m; ++i) {
    acc *= ExactInt(n - i);
    acc = acc.exact_div(ExactInt(i + 1));
  }
  return acc;
}

ExactInt gaussian_binomial(uint32_t n, uint32_t m, const ExactInt& q) {
  if (m > n) throw std::invalid_argument("gaussian_binomial: m > n");
  if (q < ExactInt(2)) throw std::invalid_argument("gaussian_binomial: q < 2");
  const ExactInt one(1);
  ExactInt acc(1);
  for (uint32_t i = 0; i < m; ++i) {
    // Each prefix is itself a Gaussian binomial, so the division is exact;
    // exact_div throws if a transcription error breaks that.
    acc *= q.pow(n - i) - one;
    acc = acc.exact_div(q.pow(i + 1) - one);
  }
  return acc;
}

uint64_t factorial_v2(uint64_t t) noexcept {
  return t - static_cast<uint64_t>(std::popcount(t));
}

bool is_prime(uint64_t q) noexcept {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (uint64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

PrimePower factor_prime_power(uint64_t q) {
  if (q < 3) throw std::invalid_argument("factor_prime_power: q must be at least 3");
  if (q % 2 == 0) throw std::invalid_argument("factor_prime_power: q must be odd");
  uint64_t p = 0;
  for (uint64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};  // q itself is prime
  uint32_t a = 0;
  uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++a;
  }
  if (rest != 1)
    throw std::invalid_argument("factor_prime_power: " + std::to_string(q) +
                                " is not a prime power");
  return {p, a};
}

}  // namespace oia
