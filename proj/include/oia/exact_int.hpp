#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace oia {

/// Arbitrary-precision non-negative integer.
///
/// Storage is a little-endian vector of 32-bit limbs with no trailing zero
/// limbs (zero is the empty vector). Subtraction requires lhs >= rhs and
/// exact_div requires exact divisibility; both throw otherwise. Group orders
/// and subgroup indices never leave the non-negative integers, so there is
/// no sign to carry.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(uint64_t v);  // NOLINT: implicit by design, allows literals

  static ExactInt from_decimal(std::string_view s);
  static ExactInt power_of_two(uint32_t exponent);

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

  /// Number of trailing zero bits; undefined for zero (throws).
  uint32_t trailing_zero_bits() const;
  size_t bit_length() const;

  ExactInt& operator+=(const ExactInt& rhs);
  ExactInt& operator-=(const ExactInt& rhs);  // throws if rhs > *this
  ExactInt& operator*=(const ExactInt& rhs);
  ExactInt& operator<<=(uint32_t bits);
  ExactInt& operator>>=(uint32_t bits);

  friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
  friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
  friend ExactInt operator*(const ExactInt& lhs, const ExactInt& rhs);
  friend ExactInt operator<<(ExactInt lhs, uint32_t bits) { return lhs <<= bits; }
  friend ExactInt operator>>(ExactInt lhs, uint32_t bits) { return lhs >>= bits; }

  struct DivMod;
  /// Long division; divisor must be nonzero.
  static DivMod div_mod(const ExactInt& dividend, const ExactInt& divisor);

  /// Division that must be exact; throws std::domain_error on a nonzero
  /// remainder. Used wherever a formula promises divisibility, so a
  /// transcription error surfaces as an exception instead of a wrong value.
  ExactInt exact_div(const ExactInt& divisor) const;

  ExactInt pow(uint32_t exponent) const;

  std::strong_ordering operator<=>(const ExactInt& rhs) const;
  bool operator==(const ExactInt& rhs) const = default;

  bool fits_uint64() const;
  uint64_t to_uint64() const;  // throws if value exceeds 64 bits
  std::string to_string() const;

 private:
  std::vector<uint32_t> limbs_;

  void trim();
  static int compare_abs(const ExactInt& a, const ExactInt& b);
};

struct ExactInt::DivMod {
  ExactInt quotient;
  ExactInt remainder;
};

inline ExactInt operator/(const ExactInt& lhs, const ExactInt& rhs) {
  return ExactInt::div_mod(lhs, rhs).quotient;
}
inline ExactInt operator%(const ExactInt& lhs, const ExactInt& rhs) {
  return ExactInt::div_mod(lhs, rhs).remainder;
}

ExactInt gcd(ExactInt a, ExactInt b);

}  // namespace oia
