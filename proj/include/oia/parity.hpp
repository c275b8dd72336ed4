#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oia/exact_int.hpp"
#include "oia/forms.hpp"
#include "oia/orders.hpp"

namespace oia {

enum class CertMethod : uint8_t { order_quotient, closed_form, orbit_count };

const char* to_string(CertMethod m);

struct TraceStep {
  std::string expression;
  ExactInt value;
};

/// Exact-arithmetic witness for the 2-adic valuation of a subgroup index.
/// index_v2 == 0 exactly when the index is odd.
struct ParityCertificate {
  uint32_t index_v2 = 0;
  CertMethod method = CertMethod::order_quotient;
  std::vector<TraceStep> trace;
};

/// Number of subspaces with the invariants of `sub` inside the natural
/// module of `spec`: the Gaussian binomial for linear groups, an isometry
/// group order quotient |Isom(V)| / (|Isom(U)| |Isom(U_perp)|) for formed
/// ones. Complement invariants are derived, never supplied. For orthogonal
/// groups of odd dimension the subspace must be given by its
/// even-dimensional side.
ExactInt subspace_orbit_size(const GroupSpec& spec, const FormSpace& sub);

ParityCertificate subspace_orbit_certificate(const GroupSpec& spec, const FormSpace& sub);

/// The closed-form 2-part expressions for the dimension-4 groups, one per
/// geometric subgroup case. Names are stable identifiers ("c3",
/// "c8-symplectic", ...) used by the verification suites.
enum class Dim4Case : uint8_t {
  // PSL_4(q)
  c3,
  c5_subfield,  // also PSp_4(q)
  c6,           // per-family congruence variants
  c8_symplectic,
  c8_orthogonal_plus,
  c8_orthogonal_minus,
  c8_unitary,
  // PSU_4(q)
  c1_m1,
  c1_m2,
  c2,  // also PSp_4(q)
  c5_symplectic,
  c5_orthogonal_plus,
  c5_orthogonal_minus,
  // PSp_4(q)
  c1,
  c3_symplectic,
  c3_unitary,
};

const char* to_string(Dim4Case c);
std::vector<Dim4Case> dim4_cases_for(Family f);

/// Whether the case is defined at this spec (square q for subfield cases,
/// the congruence domain for c6).
bool dim4_case_applicable(const GroupSpec& spec, Dim4Case c);

/// Evaluates the displayed 2-part expression exactly; the result is always
/// a power of two. Throws when the case does not belong to the family or is
/// not applicable at this q.
ExactInt dim4_two_part(const GroupSpec& spec, Dim4Case c);

/// 2-part of the order quotient |G| / |H| for a named subgroup kind paired
/// with this family and dimension. The quotient of 2-parts is formed
/// directly, so it is defined for every q the pairing admits.
ExactInt named_index_two_part(const GroupSpec& spec, SmallGroupKind kind);

/// Order-quotient certificate for a named subgroup; requires |H| to divide
/// |G| exactly (true whenever H really is a subgroup).
ParityCertificate named_index_certificate(const GroupSpec& spec, SmallGroupKind kind);

/// The displayed closed-form route for the two fixed orthogonal subgroups:
/// (q^6-1)_2 (q^4-1)_2 (q^2-1)_2 / 2^10 for Omega_7(2) inside POmega_7(q),
/// (q^4-1)_2 (q^6-1)_2 (q^4-1)_2 (q^2-1)_2 / 2^14 for Omega_8^+(2) inside
/// POmega_8^+(q). Must agree with the order-quotient route.
ExactInt named_index_two_part_display(const GroupSpec& spec, SmallGroupKind kind);

/// Whether (family, n, sign) pairs with the named kind in the classification.
bool named_pairing_valid(const GroupSpec& spec, SmallGroupKind kind);

}  // namespace oia
