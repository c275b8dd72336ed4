#include <cstdint>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oia/exact_int.hpp"

using oia::ExactInt;

TEST_SUITE_BEGIN("exact_int");

TEST_CASE("small values and decimal round trip") {
  CHECK(ExactInt(0).to_string() == "0");
  CHECK(ExactInt(1).to_string() == "1");
  CHECK(ExactInt(1000000007).to_string() == "1000000007");
  CHECK(ExactInt(0xffffffffffffffffull).to_string() == "18446744073709551615");
  CHECK(ExactInt::from_decimal("18446744073709551616").to_string() == "18446744073709551616");
  CHECK(ExactInt::from_decimal("000123").to_string() == "123");
  CHECK_THROWS_AS(ExactInt::from_decimal("12x"), std::invalid_argument);
  CHECK_THROWS_AS(ExactInt::from_decimal(""), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with 128-bit reference on random 64-bit inputs") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 2000; ++i) {
    const uint64_t a = rng() >> (1 + rng() % 32);  // < 2^63, so a + b cannot overflow
    const uint64_t b = rng() >> (1 + rng() % 32);
    const ExactInt ea(a), eb(b);
    CHECK((ea + eb).to_uint64() == a + b);
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    const ExactInt eprod = ea * eb;
    unsigned __int128 back = 0;
    for (char c : eprod.to_string()) back = back * 10 + static_cast<unsigned>(c - '0');
    CHECK(back == prod);
    if (b != 0) {
      const auto dm = ExactInt::div_mod(ea, eb);
      CHECK(dm.quotient.to_uint64() == a / b);
      CHECK(dm.remainder.to_uint64() == a % b);
    }
  }
}

TEST_CASE("multi-limb division satisfies the Euclidean identity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    ExactInt a(1), b(1);
    const int alimbs = 1 + static_cast<int>(rng() % 7);
    const int blimbs = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < alimbs; ++k) a = a * ExactInt(rng() | 1) + ExactInt(rng() % 1000);
    for (int k = 0; k < blimbs; ++k) b = b * ExactInt(rng() | 1) + ExactInt(rng() % 1000);
    const auto dm = ExactInt::div_mod(a, b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK(dm.remainder < b);
  }
  CHECK_THROWS_AS(ExactInt::div_mod(ExactInt(1), ExactInt(0)), std::domain_error);
}

TEST_CASE("exact division succeeds exactly on multiples") {
  const ExactInt a = ExactInt::from_decimal("123456789123456789123456789");
  const ExactInt b = ExactInt::from_decimal("987654321987654321");
  CHECK((a * b).exact_div(b) == a);
  CHECK_THROWS_AS((a * b + ExactInt(1)).exact_div(b), std::domain_error);
}

TEST_CASE("subtraction is checked") {
  CHECK((ExactInt(100) - ExactInt(58)).to_uint64() == 42);
  CHECK_THROWS_AS(ExactInt(1) - ExactInt(2), std::domain_error);
}

TEST_CASE("pow, shifts, bit helpers") {
  CHECK(ExactInt(3).pow(0) == ExactInt(1));
  CHECK(ExactInt(3).pow(5).to_uint64() == 243);
  CHECK(ExactInt(2).pow(100) == ExactInt::power_of_two(100));
  CHECK((ExactInt(1) << 100) == ExactInt::power_of_two(100));
  CHECK((ExactInt::power_of_two(100) >> 64).to_uint64() == (1ull << 36));
  CHECK(ExactInt(96).trailing_zero_bits() == 5);
  CHECK(ExactInt::power_of_two(77).trailing_zero_bits() == 77);
  CHECK_THROWS_AS(ExactInt(0).trailing_zero_bits(), std::invalid_argument);
  CHECK(ExactInt(0).bit_length() == 0);
  CHECK(ExactInt(255).bit_length() == 8);
  CHECK(ExactInt(256).bit_length() == 9);
  CHECK(ExactInt(7).is_odd());
  CHECK_FALSE(ExactInt(8).is_odd());
}

TEST_CASE("comparisons and gcd") {
  CHECK(ExactInt(5) < ExactInt(6));
  CHECK(ExactInt::power_of_two(64) > ExactInt(0xffffffffffffffffull) - ExactInt(1));
  CHECK(oia::gcd(ExactInt(48), ExactInt(36)).to_uint64() == 12);
  CHECK(oia::gcd(ExactInt(0), ExactInt(7)).to_uint64() == 7);
  const ExactInt big = ExactInt::from_decimal("123456789000000000000");
  CHECK(oia::gcd(big * ExactInt(6), big * ExactInt(4)) == big * ExactInt(2));
}

TEST_SUITE_END();
