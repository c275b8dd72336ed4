#include "oia/exact_int.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oia {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

ExactInt::ExactInt(uint64_t v) {
  if (v != 0) {
    limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
  }
}

ExactInt ExactInt::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("ExactInt: empty decimal string");
  ExactInt out;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("ExactInt: bad decimal digit");
    out *= ExactInt(10);
    out += ExactInt(static_cast<uint64_t>(c - '0'));
  }
  return out;
}

ExactInt ExactInt::power_of_two(uint32_t exponent) {
  ExactInt one(1);
  return one <<= exponent;
}

void ExactInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int ExactInt::compare_abs(const ExactInt& a, const ExactInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::strong_ordering ExactInt::operator<=>(const ExactInt& rhs) const {
  const int c = compare_abs(*this, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

uint32_t ExactInt::trailing_zero_bits() const {
  if (is_zero()) throw std::invalid_argument("trailing_zero_bits: zero has none");
  uint32_t bits = 0;
  size_t i = 0;
  while (limbs_[i] == 0) {
    bits += 32;
    ++i;
  }
  return bits + static_cast<uint32_t>(std::countr_zero(limbs_[i]));
}

size_t ExactInt::bit_length() const {
  if (is_zero()) return 0;
  return 32 * (limbs_.size() - 1) + (32 - std::countl_zero(limbs_.back()));
}

ExactInt& ExactInt::operator+=(const ExactInt& rhs) {
  limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
  return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& rhs) {
  if (compare_abs(*this, rhs) < 0)
    throw std::domain_error("ExactInt: subtraction would be negative");
  uint64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t sub = borrow;
    if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
    if (limbs_[i] >= sub) {
      limbs_[i] = static_cast<uint32_t>(limbs_[i] - sub);
      borrow = 0;
    } else {
      limbs_[i] = static_cast<uint32_t>(kBase + limbs_[i] - sub);
      borrow = 1;
    }
  }
  trim();
  return *this;
}

ExactInt operator*(const ExactInt& lhs, const ExactInt& rhs) {
  ExactInt out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (size_t i = 0; i < lhs.limbs_.size(); ++i) {
    uint64_t carry = 0;
    const uint64_t a = lhs.limbs_[i];
    for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
      uint64_t cur = out.limbs_[i + j] + a * rhs.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + rhs.limbs_.size();
    while (carry) {
      uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

ExactInt& ExactInt::operator*=(const ExactInt& rhs) {
  *this = *this * rhs;
  return *this;
}

ExactInt& ExactInt::operator<<=(uint32_t bits) {
  if (is_zero() || bits == 0) return *this;
  const uint32_t limb_shift = bits / 32;
  const uint32_t bit_shift = bits % 32;
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  if (bit_shift) {
    uint32_t carry = 0;
    for (size_t i = limb_shift; i < limbs_.size(); ++i) {
      const uint32_t next = limbs_[i] >> (32 - bit_shift);
      limbs_[i] = (limbs_[i] << bit_shift) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }
  return *this;
}

ExactInt& ExactInt::operator>>=(uint32_t bits) {
  const uint32_t limb_shift = bits / 32;
  const uint32_t bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
  if (bit_shift) {
    for (size_t i = 0; i < limbs_.size(); ++i) {
      uint32_t high = (i + 1 < limbs_.size()) ? limbs_[i + 1] : 0;
      limbs_[i] = (limbs_[i] >> bit_shift) | (high << (32 - bit_shift));
    }
  }
  trim();
  return *this;
}

// Knuth-style multi-limb long division with a single-limb fast path.
ExactInt::DivMod ExactInt::div_mod(const ExactInt& dividend, const ExactInt& divisor) {
  if (divisor.is_zero()) throw std::domain_error("ExactInt: division by zero");
  DivMod result;
  if (compare_abs(dividend, divisor) < 0) {
    result.remainder = dividend;
    return result;
  }
  if (divisor.limbs_.size() == 1) {
    const uint64_t d = divisor.limbs_[0];
    result.quotient.limbs_.assign(dividend.limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = dividend.limbs_.size(); i-- > 0;) {
      const uint64_t cur = (rem << 32) | dividend.limbs_[i];
      result.quotient.limbs_[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    result.quotient.trim();
    result.remainder = ExactInt(rem);
    return result;
  }

  // Normalize so the top divisor limb has its high bit set.
  const uint32_t shift = std::countl_zero(divisor.limbs_.back());
  ExactInt u = dividend << shift;
  const ExactInt v = divisor << shift;
  const size_t n = v.limbs_.size();
  const size_t m = u.limbs_.size() - n;
  u.limbs_.push_back(0);  // u now has m + n + 1 limbs

  result.quotient.limbs_.assign(m + 1, 0);
  const uint64_t v_top = v.limbs_[n - 1];
  const uint64_t v_next = v.limbs_[n - 2];

  for (size_t j = m + 1; j-- > 0;) {
    const uint64_t numerator = (static_cast<uint64_t>(u.limbs_[j + n]) << 32) | u.limbs_[j + n - 1];
    uint64_t qhat = numerator / v_top;
    uint64_t rhat = numerator % v_top;
    if (qhat >= kBase) {
      qhat = kBase - 1;
      rhat = numerator - qhat * v_top;
    }
    while (rhat < kBase && qhat * v_next > ((rhat << 32) | u.limbs_[j + n - 2])) {
      --qhat;
      rhat += v_top;
    }

    // u[j .. j+n] -= qhat * v
    uint64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      const uint64_t prod = qhat * v.limbs_[i] + carry;
      carry = prod >> 32;
      const uint64_t sub = (prod & 0xffffffffull) + borrow;
      if (u.limbs_[j + i] >= sub) {
        u.limbs_[j + i] = static_cast<uint32_t>(u.limbs_[j + i] - sub);
        borrow = 0;
      } else {
        u.limbs_[j + i] = static_cast<uint32_t>(kBase + u.limbs_[j + i] - sub);
        borrow = 1;
      }
    }
    const uint64_t top_sub = carry + borrow;
    if (u.limbs_[j + n] >= top_sub) {
      u.limbs_[j + n] = static_cast<uint32_t>(u.limbs_[j + n] - top_sub);
      borrow = 0;
    } else {
      u.limbs_[j + n] = static_cast<uint32_t>(kBase + u.limbs_[j + n] - top_sub);
      borrow = 1;
    }

    if (borrow) {
      // qhat was one too large; add v back once.
      --qhat;
      uint64_t c = 0;
      for (size_t i = 0; i < n; ++i) {
        const uint64_t sum = static_cast<uint64_t>(u.limbs_[j + i]) + v.limbs_[i] + c;
        u.limbs_[j + i] = static_cast<uint32_t>(sum);
        c = sum >> 32;
      }
      u.limbs_[j + n] = static_cast<uint32_t>(u.limbs_[j + n] + c);
    }
    result.quotient.limbs_[j] = static_cast<uint32_t>(qhat);
  }

  result.quotient.trim();
  u.trim();
  result.remainder = u >> shift;
  return result;
}

ExactInt ExactInt::exact_div(const ExactInt& divisor) const {
  DivMod dm = div_mod(*this, divisor);
  if (!dm.remainder.is_zero())
    throw std::domain_error("ExactInt: inexact division (" + to_string() + " / " +
                            divisor.to_string() + ")");
  return dm.quotient;
}

ExactInt ExactInt::pow(uint32_t exponent) const {
  ExactInt base = *this;
  ExactInt out(1);
  while (exponent) {
    if (exponent & 1) out *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return out;
}

bool ExactInt::fits_uint64() const { return limbs_.size() <= 2; }

uint64_t ExactInt::to_uint64() const {
  if (!fits_uint64()) throw std::domain_error("ExactInt: value exceeds 64 bits");
  uint64_t out = 0;
  if (limbs_.size() > 1) out = static_cast<uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) out |= limbs_[0];
  return out;
}

std::string ExactInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> chunks;  // base 10^9, little-endian
  ExactInt tmp = *this;
  const ExactInt billion(1000000000ull);
  while (!tmp.is_zero()) {
    DivMod dm = div_mod(tmp, billion);
    chunks.push_back(static_cast<uint32_t>(dm.remainder.to_uint64()));
    tmp = std::move(dm.quotient);
  }
  std::string out = std::to_string(chunks.back());
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

ExactInt gcd(ExactInt a, ExactInt b) {
  while (!b.is_zero()) {
    ExactInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace oia
