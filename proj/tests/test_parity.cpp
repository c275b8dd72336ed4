#include <stdexcept>

#include "doctest.h"
#include "oia/parity.hpp"

using oia::Dim4Case;
using oia::dim4_case_applicable;
using oia::dim4_cases_for;
using oia::dim4_two_part;
using oia::Disc;
using oia::ExactInt;
using oia::Family;
using oia::FormKind;
using oia::FormSpace;
using oia::GroupSpec;
using oia::named_index_two_part;
using oia::named_index_two_part_display;
using oia::Sign;
using oia::SmallGroupKind;
using oia::subspace_orbit_certificate;
using oia::subspace_orbit_size;

namespace {

FormSpace plain(uint32_t m, FormKind kind) { return FormSpace{m, kind, {}, {}}; }

}  // namespace

TEST_SUITE_BEGIN("parity");

TEST_CASE("subspace orbit sizes") {
  CHECK(subspace_orbit_size({Family::linear, 4, 3, {}}, plain(2, FormKind::linear))
            .to_uint64() == 130);
  CHECK(subspace_orbit_size({Family::symplectic, 4, 3, {}}, plain(2, FormKind::symplectic))
            .to_uint64() == 90);  // 51840 / 576, matching the exhaustive count
  for (uint64_t q : {5, 7, 13})
    CHECK(subspace_orbit_size({Family::linear, 2, q, {}}, plain(1, FormKind::linear))
              .to_uint64() == q + 1);
  CHECK(subspace_orbit_size({Family::unitary, 3, 5, {}}, plain(1, FormKind::unitary))
            .to_uint64() == 525);

  // POmega_7(3), non-degenerate 2-subspaces of minus type: 18341406720 / (8 * 103680).
  FormSpace orth2{2, FormKind::orthogonal, Disc::square, Sign::minus};
  CHECK(subspace_orbit_size({Family::orthogonal_odd, 7, 3, {}}, orth2).to_uint64() == 22113);

  CHECK_THROWS_AS(
      subspace_orbit_size({Family::symplectic, 4, 3, {}}, plain(1, FormKind::symplectic)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      subspace_orbit_size({Family::linear, 4, 3, {}}, plain(4, FormKind::linear)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      subspace_orbit_size({Family::orthogonal_odd, 7, 3, {}}, plain(3, FormKind::orthogonal)),
      std::invalid_argument);
  // Kind mismatch.
  CHECK_THROWS_AS(
      subspace_orbit_size({Family::symplectic, 4, 3, {}}, plain(2, FormKind::linear)),
      std::invalid_argument);
}

TEST_CASE("orbit parity recovers the dominance criterion for subspace stabilizers") {
  // Linear: v2(orbit) = 0 iff m is dominated by n.
  for (uint64_t q : {3, 5, 7, 9, 11, 13})
    for (uint32_t n = 2; n <= 12; ++n)
      for (uint32_t m = 1; m < n; ++m) {
        if (n == 2 && q == 3) continue;  // PSL_2(3) is not simple
        const auto cert =
            subspace_orbit_certificate({Family::linear, n, q, {}}, plain(m, FormKind::linear));
        CHECK((cert.index_v2 == 0) == oia::dominates(m, n));
      }
  // Symplectic, even m < n/2.
  for (uint64_t q : {3, 5, 7, 9})
    for (uint32_t n = 4; n <= 12; n += 2)
      for (uint32_t m = 2; 2 * m < n; m += 2) {
        const auto cert = subspace_orbit_certificate({Family::symplectic, n, q, {}},
                                                     plain(m, FormKind::symplectic));
        CHECK((cert.index_v2 == 0) == oia::dominates(m, n));
      }
  // Unitary, m < n/2.
  for (uint64_t q : {3, 5, 7, 9})
    for (uint32_t n = 3; n <= 9; ++n)
      for (uint32_t m = 1; 2 * m < n; ++m) {
        const auto cert = subspace_orbit_certificate({Family::unitary, n, q, {}},
                                                     plain(m, FormKind::unitary));
        CHECK((cert.index_v2 == 0) == oia::dominates(m, n));
      }
}

TEST_CASE("orbit certificates carry a multiplying trace") {
  const auto cert =
      subspace_orbit_certificate({Family::symplectic, 4, 3, {}}, plain(2, FormKind::symplectic));
  CHECK(cert.method == oia::CertMethod::orbit_count);
  CHECK(cert.index_v2 == 1);  // 90 = 2 * 45
  REQUIRE(!cert.trace.empty());
  CHECK(cert.trace.back().value == ExactInt(2));
}

TEST_CASE("dim4 worked values") {
  CHECK(dim4_two_part({Family::linear, 4, 7, {}}, Dim4Case::c8_symplectic) == ExactInt(1));
  CHECK(dim4_two_part({Family::unitary, 4, 5, {}}, Dim4Case::c5_symplectic) == ExactInt(1));
  CHECK(dim4_two_part({Family::symplectic, 4, 5, {}}, Dim4Case::c6) == ExactInt(1));
  CHECK(dim4_two_part({Family::linear, 4, 5, {}}, Dim4Case::c3) == ExactInt(8));
  CHECK(dim4_two_part({Family::linear, 4, 5, {}}, Dim4Case::c6) == ExactInt(1));
  CHECK(dim4_two_part({Family::linear, 4, 9, {}}, Dim4Case::c5_subfield) == ExactInt(4));
  CHECK(dim4_two_part({Family::symplectic, 4, 9, {}}, Dim4Case::c5_subfield) == ExactInt(2));
  CHECK(dim4_two_part({Family::symplectic, 4, 169, {}}, Dim4Case::c5_subfield) == ExactInt(2));
}

TEST_CASE("dim4 case bookkeeping") {
  CHECK(dim4_cases_for(Family::linear).size() == 7);
  CHECK(dim4_cases_for(Family::unitary).size() == 7);
  CHECK(dim4_cases_for(Family::symplectic).size() == 6);
  CHECK(dim4_cases_for(Family::orthogonal_odd).empty());

  CHECK_FALSE(dim4_case_applicable({Family::linear, 4, 7, {}}, Dim4Case::c5_subfield));
  CHECK(dim4_case_applicable({Family::linear, 4, 9, {}}, Dim4Case::c5_subfield));
  CHECK_FALSE(dim4_case_applicable({Family::linear, 4, 7, {}}, Dim4Case::c6));
  CHECK(dim4_case_applicable({Family::unitary, 4, 7, {}}, Dim4Case::c6));
  CHECK(dim4_case_applicable({Family::symplectic, 4, 7, {}}, Dim4Case::c6));

  CHECK_THROWS_AS(dim4_two_part({Family::linear, 4, 5, {}}, Dim4Case::c1),
                  std::invalid_argument);
  CHECK_THROWS_AS(dim4_two_part({Family::linear, 2, 5, {}}, Dim4Case::c3),
                  std::invalid_argument);
  CHECK_THROWS_AS(dim4_two_part({Family::linear, 4, 7, {}}, Dim4Case::c6),
                  std::invalid_argument);
}

TEST_CASE("the shared PSp_4 c1 display covers both singular-subspace stabilizers") {
  // The point stabilizer and the totally-singular-plane stabilizer of
  // PSp_4(q) both have index (q^2+1)(q+1); the single c1 display is the
  // two-part of that number. Checked on the grid rather than assumed.
  for (uint64_t q = 3; q <= 199; q += 2) {
    try {
      oia::factor_prime_power(q);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const ExactInt index = (ExactInt(q).pow(2) + ExactInt(1)) * ExactInt(q + 1);
    CHECK(dim4_two_part({Family::symplectic, 4, q, {}}, Dim4Case::c1) ==
          oia::two_part(index));
  }
}

TEST_CASE("named index two-parts") {
  CHECK(named_index_two_part({Family::orthogonal_odd, 7, 3, {}}, SmallGroupKind::omega7_2) ==
        ExactInt(1));
  CHECK(named_index_two_part({Family::orthogonal_odd, 7, 7, {}}, SmallGroupKind::omega7_2) ==
        ExactInt(8));
  CHECK(named_index_two_part({Family::linear, 2, 13, {}}, SmallGroupKind::a4) == ExactInt(1));
  CHECK(named_index_two_part({Family::linear, 2, 7, {}}, SmallGroupKind::s4) == ExactInt(1));

  // The displayed closed form agrees with the order quotient.
  for (uint64_t q : {3, 5, 7, 11, 13}) {
    GroupSpec omega7{Family::orthogonal_odd, 7, q, {}};
    CHECK(named_index_two_part(omega7, SmallGroupKind::omega7_2) ==
          named_index_two_part_display(omega7, SmallGroupKind::omega7_2));
    GroupSpec omega8{Family::orthogonal_even, 8, q, Sign::plus};
    CHECK(named_index_two_part(omega8, SmallGroupKind::omega8_plus_2) ==
          named_index_two_part_display(omega8, SmallGroupKind::omega8_plus_2));
  }

  CHECK_THROWS_AS(named_index_two_part({Family::linear, 2, 7, {}}, SmallGroupKind::omega7_2),
                  std::invalid_argument);
  CHECK_THROWS_AS(named_index_two_part({Family::linear, 3, 7, {}}, SmallGroupKind::a4),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      named_index_two_part({Family::linear, 2, 7, {}}, SmallGroupKind::pgl2_root),
      std::invalid_argument);
}

TEST_CASE("the exact index of PGL_2(q0) in PSL_2(q0^2) is q0 (q0^2 + 1) / 2") {
  // 360 / 24 = 15 = 3 * 10 / 2 at q0 = 3; always odd for odd q0.
  const auto cert =
      oia::named_index_certificate({Family::linear, 2, 9, {}}, SmallGroupKind::pgl2_root);
  CHECK(cert.index_v2 == 0);
  CHECK(cert.trace[2].value == ExactInt(15));
  const auto cert25 =
      oia::named_index_certificate({Family::linear, 2, 25, {}}, SmallGroupKind::pgl2_root);
  CHECK(cert25.trace[2].value == ExactInt(5 * 26 / 2));
}

TEST_SUITE_END();
