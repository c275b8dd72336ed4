#include <stdexcept>

#include "doctest.h"
#include "oia/orders.hpp"

using oia::ExactInt;
using oia::Family;
using oia::GroupSpec;
using oia::order_2part;
using oia::order_isometry;
using oia::order_simple;
using oia::order_small;
using oia::Sign;
using oia::SmallGroupKind;
using oia::v2;

TEST_SUITE_BEGIN("orders");

TEST_CASE("simple group orders frozen from the enumeration oracles") {
  // PSL_2(7): 336 unimodular 2x2 matrices over F_7, modulo the center {+-1}.
  CHECK(order_simple({Family::linear, 2, 7, {}}).to_uint64() == 168);
  // PSL_2(13): 2184 / 2. The matrix count is re-derived in the oracle suite.
  CHECK(order_simple({Family::linear, 2, 13, {}}).to_uint64() == 1092);
  // PSp_4(3): 51840 ordered symplectic bases of F_3^4, modulo {+-1}.
  CHECK(order_simple({Family::symplectic, 4, 3, {}}).to_uint64() == 25920);

  CHECK(order_simple({Family::linear, 2, 5, {}}).to_uint64() == 60);
  CHECK(order_simple({Family::linear, 2, 9, {}}).to_uint64() == 360);
  CHECK(order_simple({Family::unitary, 3, 5, {}}).to_uint64() == 126000);
  CHECK(order_simple({Family::unitary, 3, 3, {}}).to_uint64() == 6048);
  CHECK(order_simple({Family::unitary, 4, 3, {}}).to_uint64() == 3265920);
  CHECK(order_simple({Family::orthogonal_odd, 7, 3, {}}).to_uint64() == 4585351680);
  CHECK(order_simple({Family::orthogonal_even, 8, 3, Sign::plus}).to_uint64() ==
        4952179814400);
  CHECK(order_simple({Family::orthogonal_even, 8, 3, Sign::minus}).to_uint64() ==
        10151968619520);
}

TEST_CASE("isometry group orders") {
  CHECK(order_isometry(Family::linear, 2, 3, {}).to_uint64() == 48);
  CHECK(order_isometry(Family::symplectic, 2, 3, {}).to_uint64() == 24);  // Sp_2 = SL_2
  CHECK(order_isometry(Family::unitary, 3, 3, {}).to_uint64() == 24192);
  CHECK(order_isometry(Family::unitary, 1, 3, {}).to_uint64() == 4);
  CHECK(order_isometry(Family::orthogonal_odd, 3, 3, {}).to_uint64() == 48);
  CHECK(order_isometry(Family::orthogonal_even, 2, 3, Sign::plus).to_uint64() == 4);
  CHECK(order_isometry(Family::orthogonal_even, 2, 3, Sign::minus).to_uint64() == 8);
  CHECK(order_isometry(Family::orthogonal_even, 4, 3, Sign::plus).to_uint64() == 1152);
  CHECK(order_isometry(Family::orthogonal_even, 4, 3, Sign::minus).to_uint64() == 1440);
  CHECK(order_isometry(Family::linear, 0, 3, {}).to_uint64() == 1);
  CHECK_THROWS_AS(order_isometry(Family::symplectic, 3, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(order_isometry(Family::orthogonal_even, 4, 3, {}), std::invalid_argument);
}

TEST_CASE("|PSL_n(q)| * gcd(n, q-1) * (q-1) == |GL_n(q)|") {
  for (uint32_t n = 2; n <= 8; ++n)
    for (uint64_t q : {3, 5, 7, 9, 11, 13}) {
      if (n == 2 && q == 3) continue;
      const ExactInt lhs = order_simple({Family::linear, n, q, {}}) *
                           oia::gcd(ExactInt(n), ExactInt(q - 1)) * ExactInt(q - 1);
      CHECK(lhs == order_isometry(Family::linear, n, q, {}));
    }
}

TEST_CASE("orders of the named small groups") {
  CHECK(order_small(SmallGroupKind::a4, 0).to_uint64() == 12);
  CHECK(order_small(SmallGroupKind::s4, 0).to_uint64() == 24);
  CHECK(order_small(SmallGroupKind::a5, 0).to_uint64() == 60);
  CHECK(order_small(SmallGroupKind::m10, 0).to_uint64() == 720);
  CHECK(order_small(SmallGroupKind::extraspecial_2_4_a6, 0).to_uint64() == 5760);
  CHECK(order_small(SmallGroupKind::extraspecial_2_4_a5, 0).to_uint64() == 960);
  CHECK(order_small(SmallGroupKind::dihedral_q_plus_1, 13).to_uint64() == 14);
  CHECK(order_small(SmallGroupKind::pgl2_root, 9).to_uint64() == 24);    // PGL_2(3)
  CHECK(order_small(SmallGroupKind::pgl2_root, 25).to_uint64() == 120);  // PGL_2(5)
  CHECK(order_small(SmallGroupKind::psp4_dot_2, 3).to_uint64() == 51840);
  CHECK_THROWS_AS(order_small(SmallGroupKind::pgl2_root, 5), std::invalid_argument);
  CHECK_THROWS_AS(order_small(SmallGroupKind::dihedral_q_plus_1, 0), std::invalid_argument);
  CHECK_THROWS_AS(order_small(SmallGroupKind::field_aut_centralizer, 9), std::invalid_argument);
}

TEST_CASE("the two fixed constants match their product formulas at q = 2") {
  // |Omega_7(2)| = 2^9 (2^2-1)(2^4-1)(2^6-1)
  ExactInt omega7 = ExactInt(2).pow(9);
  for (uint32_t i : {2u, 4u, 6u}) omega7 *= ExactInt(2).pow(i) - ExactInt(1);
  CHECK(order_small(SmallGroupKind::omega7_2, 0) == omega7);
  CHECK(v2(order_small(SmallGroupKind::omega7_2, 0)) == 9);

  // |Omega_8^+(2)| = 2^12 (2^4-1) (2^2-1)(2^4-1)(2^6-1); gcd(4, 2^4-1) = 1
  ExactInt omega8 = ExactInt(2).pow(12) * (ExactInt(2).pow(4) - ExactInt(1));
  for (uint32_t i : {2u, 4u, 6u}) omega8 *= ExactInt(2).pow(i) - ExactInt(1);
  CHECK(order_small(SmallGroupKind::omega8_plus_2, 0) == omega8);
  CHECK(v2(order_small(SmallGroupKind::omega8_plus_2, 0)) == 12);
}

TEST_CASE("two-parts of simple orders") {
  CHECK(order_2part({Family::linear, 4, 5, {}}) == 7);
  CHECK(order_2part({Family::linear, 2, 13, {}}) == 2);
  // The symplectic closed form (q^4-1)_2 (q^2-1)_2 / 2: at q = 3 this is
  // 16 * 8 / 2 = 2^6, matching |PSp_4(3)| = 25920 = 2^6 * 405. The
  // frame-counting oracle adjudicates the center factor.
  CHECK(order_2part({Family::symplectic, 4, 3, {}}) == 6);
  for (uint64_t q : {3, 5, 7, 9, 11, 13}) {
    const uint32_t direct = order_2part({Family::symplectic, 4, q, {}});
    const uint32_t closed =
        v2(oia::two_part(ExactInt(q).pow(4) - ExactInt(1)) *
           oia::two_part(ExactInt(q).pow(2) - ExactInt(1))) -
        1;
    CHECK(direct == closed);
  }
}

TEST_CASE("dimension-4 order two-part displays") {
  for (uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27}) {
    {
      // |PSL_4(q)|_2 = (q^4-1)_2 (q^3-1)_2 (q^2-1)_2 / (q-1, 4) >= 2^7
      const ExactInt num = oia::two_part(ExactInt(q).pow(4) - ExactInt(1)) *
                           oia::two_part(ExactInt(q).pow(3) - ExactInt(1)) *
                           oia::two_part(ExactInt(q).pow(2) - ExactInt(1));
      const ExactInt display = num.exact_div(oia::gcd(ExactInt(q - 1), ExactInt(4)));
      CHECK(v2(display) == order_2part({Family::linear, 4, q, {}}));
      CHECK(v2(display) >= 7);
    }
    {
      // |PSU_4(q)|_2 = (q^4-1)_2 (q^3+1)_2 (q^2-1)_2 / (q+1, 4) >= 2^7
      const ExactInt num = oia::two_part(ExactInt(q).pow(4) - ExactInt(1)) *
                           oia::two_part(ExactInt(q).pow(3) + ExactInt(1)) *
                           oia::two_part(ExactInt(q).pow(2) - ExactInt(1));
      const ExactInt display = num.exact_div(oia::gcd(ExactInt(q + 1), ExactInt(4)));
      CHECK(v2(display) == order_2part({Family::unitary, 4, q, {}}));
      CHECK(v2(display) >= 7);
    }
  }
}

TEST_CASE("PSL_2 orders recombine through TwoAdic") {
  for (uint64_t q : {5, 7, 9, 11, 13, 25, 27}) {
    const ExactInt order = order_simple({Family::linear, 2, q, {}});
    CHECK(order == ExactInt(q) * (ExactInt(q).pow(2) - ExactInt(1)) / ExactInt(2));
    const auto t = oia::TwoAdic::of(order);
    CHECK(t.recombine() == order);
    CHECK(t.odd_part.is_odd());
  }
}

TEST_CASE("validate_spec names the violated bound") {
  CHECK_THROWS_WITH_AS(order_simple({Family::linear, 1, 5, {}}), doctest::Contains("n >= 2"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(order_simple({Family::linear, 2, 3, {}}), doctest::Contains("PSL_2(3)"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(order_simple({Family::unitary, 2, 5, {}}), doctest::Contains("n >= 3"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(order_simple({Family::symplectic, 5, 5, {}}),
                       doctest::Contains("even n >= 4"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(order_simple({Family::orthogonal_odd, 5, 5, {}}),
                       doctest::Contains("odd n >= 7"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(order_simple({Family::orthogonal_even, 8, 5, {}}),
                       doctest::Contains("sign"), std::invalid_argument);
  CHECK_THROWS_AS(order_simple({Family::linear, 4, 8, {}}), std::invalid_argument);
  CHECK_THROWS_AS(order_simple({Family::linear, 4, 15, {}}), std::invalid_argument);
  CHECK_THROWS_AS(order_simple({Family::linear, 4, 5, Sign::plus}), std::invalid_argument);
}

TEST_SUITE_END();
