#include "oia/parity.hpp"

#include <algorithm>
#include <stdexcept>

namespace oia {

namespace {

ExactInt tp(const ExactInt& k) { return two_part(k); }
ExactInt qpow_minus_1(uint64_t q, uint32_t e) { return ExactInt(q).pow(e) - ExactInt(1); }
ExactInt qpow_plus_1(uint64_t q, uint32_t e) { return ExactInt(q).pow(e) + ExactInt(1); }

// 2-part of (q^4-1)(q^3-1)(q^2-1), the linear dimension-4 numerator.
ExactInt num_linear(uint64_t q) {
  return tp(qpow_minus_1(q, 4)) * tp(qpow_minus_1(q, 3)) * tp(qpow_minus_1(q, 2));
}
// 2-part of (q^4-1)(q^3+1)(q^2-1), the unitary one.
ExactInt num_unitary(uint64_t q) {
  return tp(qpow_minus_1(q, 4)) * tp(qpow_plus_1(q, 3)) * tp(qpow_minus_1(q, 2));
}
// 2-part of (q^4-1)(q^2-1), the symplectic one.
ExactInt num_symplectic(uint64_t q) {
  return tp(qpow_minus_1(q, 4)) * tp(qpow_minus_1(q, 2));
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

ExactInt power_of_two_quotient(const ExactInt& num, const ExactInt& den) {
  ExactInt out = num.exact_div(den);
  if (out != two_part(out))
    throw std::logic_error("dim4_two_part: expression did not reduce to a power of two");
  return out;
}

uint64_t require_square_root(uint64_t q, const char* what) {
  const auto q0 = exact_sqrt(q);
  if (!q0) throw std::invalid_argument(std::string(what) + ": requires q = q0^2");
  return *q0;
}

}  // namespace

const char* to_string(CertMethod m) {
  switch (m) {
    case CertMethod::order_quotient: return "order-quotient";
    case CertMethod::closed_form: return "closed-form";
    case CertMethod::orbit_count: return "orbit-count";
  }
  return "?";
}

ExactInt subspace_orbit_size(const GroupSpec& spec, const FormSpace& sub) {
  validate_spec(spec);
  if (sub.kind != spec.form_kind())
    throw std::invalid_argument("subspace_orbit_size: form kind mismatch");
  const uint32_t n = spec.n;
  const uint32_t m = sub.dim;
  if (m == 0 || m >= n)
    throw std::invalid_argument("subspace_orbit_size: need 0 < m < n");
  sub.validate(spec.q);

  switch (spec.family) {
    case Family::linear:
      return gaussian_binomial(n, m, ExactInt(spec.q));
    case Family::symplectic: {
      if (m % 2 != 0)
        throw std::invalid_argument(
            "subspace_orbit_size: non-degenerate symplectic subspaces have even dimension");
      const ExactInt whole = order_isometry(Family::symplectic, n, spec.q, std::nullopt);
      const ExactInt part = order_isometry(Family::symplectic, m, spec.q, std::nullopt);
      const ExactInt comp = order_isometry(Family::symplectic, n - m, spec.q, std::nullopt);
      return whole.exact_div(part * comp);
    }
    case Family::unitary: {
      const ExactInt whole = order_isometry(Family::unitary, n, spec.q, std::nullopt);
      const ExactInt part = order_isometry(Family::unitary, m, spec.q, std::nullopt);
      const ExactInt comp = order_isometry(Family::unitary, n - m, spec.q, std::nullopt);
      return whole.exact_div(part * comp);
    }
    case Family::orthogonal_odd: {
      if (m % 2 != 0)
        throw std::invalid_argument(
            "subspace_orbit_size: give odd-dimensional subspaces of an odd-dimensional "
            "orthogonal space by their even-dimensional complement");
      if (!sub.sign.has_value())
        throw std::invalid_argument("subspace_orbit_size: even orthogonal subspace needs a sign");
      const ExactInt whole = order_isometry(Family::orthogonal_odd, n, spec.q, std::nullopt);
      const ExactInt part = order_isometry(FormKind::orthogonal, m, spec.q, sub.sign);
      const ExactInt comp = order_isometry(FormKind::orthogonal, n - m, spec.q, std::nullopt);
      return whole.exact_div(part * comp);
    }
    case Family::orthogonal_even: {
      const ExactInt whole = order_isometry(Family::orthogonal_even, n, spec.q, spec.sign);
      if (m % 2 == 0) {
        if (!sub.sign.has_value())
          throw std::invalid_argument("subspace_orbit_size: even orthogonal subspace needs a sign");
        // Complement sign from the sign product rule.
        const Sign comp_sign = *spec.sign * *sub.sign;
        const ExactInt part = order_isometry(FormKind::orthogonal, m, spec.q, sub.sign);
        const ExactInt comp = order_isometry(FormKind::orthogonal, n - m, spec.q, comp_sign);
        return whole.exact_div(part * comp);
      }
      // Odd m, odd complement: isometry orders do not depend on the
      // discriminant class, and the orbit is the same for either class.
      const ExactInt part = order_isometry(FormKind::orthogonal, m, spec.q, std::nullopt);
      const ExactInt comp = order_isometry(FormKind::orthogonal, n - m, spec.q, std::nullopt);
      return whole.exact_div(part * comp);
    }
  }
  throw std::logic_error("subspace_orbit_size: unreachable");
}

ParityCertificate subspace_orbit_certificate(const GroupSpec& spec, const FormSpace& sub) {
  ParityCertificate cert;
  cert.method = CertMethod::orbit_count;
  const ExactInt orbit = subspace_orbit_size(spec, sub);
  if (spec.family == Family::linear) {
    cert.trace.push_back({"orbit = gauss(" + std::to_string(spec.n) + "," +
                              std::to_string(sub.dim) + ";" + std::to_string(spec.q) + ")",
                          orbit});
  } else {
    const ExactInt whole = order_isometry(spec.family, spec.n, spec.q, spec.sign);
    cert.trace.push_back({"|Isom(V)|", whole});
    cert.trace.push_back({"orbit = |Isom(V)| / (|Isom(U)| * |Isom(U_perp)|)", orbit});
  }
  cert.trace.push_back({"(orbit)_2", two_part(orbit)});
  cert.index_v2 = v2(orbit);
  return cert;
}

const char* to_string(Dim4Case c) {
  switch (c) {
    case Dim4Case::c3: return "c3";
    case Dim4Case::c5_subfield: return "c5-subfield";
    case Dim4Case::c6: return "c6";
    case Dim4Case::c8_symplectic: return "c8-symplectic";
    case Dim4Case::c8_orthogonal_plus: return "c8-orthogonal+";
    case Dim4Case::c8_orthogonal_minus: return "c8-orthogonal-";
    case Dim4Case::c8_unitary: return "c8-unitary";
    case Dim4Case::c1_m1: return "c1-m1";
    case Dim4Case::c1_m2: return "c1-m2";
    case Dim4Case::c2: return "c2";
    case Dim4Case::c5_symplectic: return "c5-symplectic";
    case Dim4Case::c5_orthogonal_plus: return "c5-orthogonal+";
    case Dim4Case::c5_orthogonal_minus: return "c5-orthogonal-";
    case Dim4Case::c1: return "c1";
    case Dim4Case::c3_symplectic: return "c3-symplectic";
    case Dim4Case::c3_unitary: return "c3-unitary";
  }
  return "?";
}

std::vector<Dim4Case> dim4_cases_for(Family f) {
  switch (f) {
    case Family::linear:
      return {Dim4Case::c3,
              Dim4Case::c5_subfield,
              Dim4Case::c6,
              Dim4Case::c8_symplectic,
              Dim4Case::c8_orthogonal_plus,
              Dim4Case::c8_orthogonal_minus,
              Dim4Case::c8_unitary};
    case Family::unitary:
      return {Dim4Case::c1_m1,          Dim4Case::c1_m2,
              Dim4Case::c2,             Dim4Case::c5_symplectic,
              Dim4Case::c5_orthogonal_plus, Dim4Case::c5_orthogonal_minus,
              Dim4Case::c6};
    case Family::symplectic:
      return {Dim4Case::c1,         Dim4Case::c2,          Dim4Case::c3_symplectic,
              Dim4Case::c3_unitary, Dim4Case::c5_subfield, Dim4Case::c6};
    default:
      return {};
  }
}

bool dim4_case_applicable(const GroupSpec& spec, Dim4Case c) {
  switch (c) {
    case Dim4Case::c5_subfield:
    case Dim4Case::c8_unitary:
      return exact_sqrt(spec.q).has_value();
    case Dim4Case::c6:
      if (spec.family == Family::linear) return spec.q % 4 == 1;
      if (spec.family == Family::unitary) return spec.q % 4 == 3;
      return true;
    default:
      return true;
  }
}

ExactInt dim4_two_part(const GroupSpec& spec, Dim4Case c) {
  validate_spec(spec);
  if (spec.n != 4) throw std::invalid_argument("dim4_two_part: n must be 4");
  const auto cases = dim4_cases_for(spec.family);
  if (std::find(cases.begin(), cases.end(), c) == cases.end())
    throw std::invalid_argument("dim4_two_part: case does not belong to this family");
  if (!dim4_case_applicable(spec, c))
    throw std::invalid_argument("dim4_two_part: case not applicable at this q");
  const uint64_t q = spec.q;

  switch (spec.family) {
    case Family::linear: {
      const ExactInt num = num_linear(q);
      switch (c) {
        case Dim4Case::c3:
          return power_of_two_quotient(num,
                                       ExactInt(2) * tp(qpow_minus_1(q, 4)) * tp(ExactInt(q + 1)));
        case Dim4Case::c5_subfield: {
          const uint64_t q0 = require_square_root(q, "c5-subfield");
          return power_of_two_quotient(num,
                                       num_linear(q0) * ExactInt(gcd_u64(q0 + 1, 4)));
        }
        case Dim4Case::c6:
          return power_of_two_quotient(num,
                                       ExactInt::power_of_two(q % 8 == 1 ? 10 : 9));
        case Dim4Case::c8_symplectic: {
          const ExactInt g(gcd_u64(q - 1, 4));
          const ExactInt den = tp(qpow_minus_1(q, 4)) * tp(qpow_minus_1(q, 2)) * g * ExactInt(4);
          return power_of_two_quotient(ExactInt(2) * num * g, den);
        }
        case Dim4Case::c8_orthogonal_plus:
          return power_of_two_quotient(
              num, ExactInt(gcd_u64(q - 1, 4)) * tp(qpow_minus_1(q, 2)) * tp(qpow_minus_1(q, 2)));
        case Dim4Case::c8_orthogonal_minus:
          return power_of_two_quotient(
              num, ExactInt(gcd_u64(q - 1, 4)) * tp(qpow_plus_1(q, 2)) * tp(qpow_minus_1(q, 2)));
        case Dim4Case::c8_unitary: {
          const uint64_t q0 = require_square_root(q, "c8-unitary");
          const ExactInt den = tp(qpow_minus_1(q0, 4)) * tp(qpow_plus_1(q0, 3)) *
                               tp(qpow_minus_1(q0, 2)) * ExactInt(gcd_u64(q0 - 1, 4));
          return power_of_two_quotient(num, den);
        }
        default: break;
      }
      break;
    }
    case Family::unitary: {
      const ExactInt num = num_unitary(q);
      switch (c) {
        case Dim4Case::c1_m1:
          return power_of_two_quotient(num, tp(qpow_minus_1(q, 2)) * tp(qpow_minus_1(q, 2)));
        case Dim4Case::c1_m2:
          return power_of_two_quotient(num, tp(qpow_minus_1(q, 4)) * tp(ExactInt(q - 1)));
        case Dim4Case::c2:
          return power_of_two_quotient(num, ExactInt(2) * tp(qpow_minus_1(q, 4)) *
                                                tp(ExactInt(q - 1)));
        case Dim4Case::c5_symplectic: {
          const ExactInt g(gcd_u64(q + 1, 4));
          const ExactInt den =
              g * tp(qpow_minus_1(q, 4)) * tp(qpow_minus_1(q, 2)) * ExactInt(4);
          return power_of_two_quotient(ExactInt(2) * num * g, den);
        }
        case Dim4Case::c5_orthogonal_plus:
          return power_of_two_quotient(
              num, ExactInt(gcd_u64(q + 1, 4)) * tp(qpow_minus_1(q, 2)) * tp(qpow_minus_1(q, 2)));
        case Dim4Case::c5_orthogonal_minus:
          return power_of_two_quotient(
              num, ExactInt(gcd_u64(q + 1, 4)) * tp(qpow_plus_1(q, 2)) * tp(qpow_minus_1(q, 2)));
        case Dim4Case::c6:
          return power_of_two_quotient(num,
                                       ExactInt::power_of_two(q % 8 == 7 ? 10 : 9));
        default: break;
      }
      break;
    }
    case Family::symplectic: {
      const ExactInt num = num_symplectic(q);
      switch (c) {
        case Dim4Case::c1:
          return power_of_two_quotient(num, tp(qpow_minus_1(q, 2)) * tp(ExactInt(q - 1)));
        case Dim4Case::c2:
        case Dim4Case::c3_unitary:
          return power_of_two_quotient(
              num, ExactInt(2) * tp(qpow_minus_1(q, 2)) * tp(ExactInt(q - 1)));
        case Dim4Case::c3_symplectic:
          return power_of_two_quotient(num, ExactInt(2) * tp(qpow_minus_1(q, 4)));
        case Dim4Case::c5_subfield: {
          const uint64_t q0 = require_square_root(q, "c5-subfield");
          return power_of_two_quotient(
              num, ExactInt(2) * tp(qpow_minus_1(q0, 4)) * tp(qpow_minus_1(q0, 2)));
        }
        case Dim4Case::c6: {
          const bool near_1 = (q % 8 == 1 || q % 8 == 7);
          return power_of_two_quotient(num, ExactInt::power_of_two(near_1 ? 8 : 7));
        }
        default: break;
      }
      break;
    }
    default:
      break;
  }
  throw std::invalid_argument("dim4_two_part: case does not belong to this family");
}

bool named_pairing_valid(const GroupSpec& spec, SmallGroupKind kind) {
  switch (kind) {
    case SmallGroupKind::a4:
    case SmallGroupKind::s4:
    case SmallGroupKind::a5:
    case SmallGroupKind::dihedral_q_plus_1:
      return spec.family == Family::linear && spec.n == 2;
    case SmallGroupKind::pgl2_root:
      return spec.family == Family::linear && spec.n == 2 && exact_sqrt(spec.q).has_value();
    case SmallGroupKind::m10:
      return spec.family == Family::unitary && spec.n == 3;
    case SmallGroupKind::extraspecial_2_4_a6:
      return (spec.family == Family::linear || spec.family == Family::unitary) && spec.n == 4;
    case SmallGroupKind::psp4_dot_2:
      return (spec.family == Family::linear || spec.family == Family::unitary) && spec.n == 4;
    case SmallGroupKind::extraspecial_2_4_a5:
      return spec.family == Family::symplectic && spec.n == 4;
    case SmallGroupKind::omega7_2:
      return spec.family == Family::orthogonal_odd && spec.n == 7;
    case SmallGroupKind::omega8_plus_2:
      return spec.family == Family::orthogonal_even && spec.n == 8 && spec.sign &&
             *spec.sign == Sign::plus;
    case SmallGroupKind::field_aut_centralizer:
      return false;
  }
  return false;
}

ExactInt named_index_two_part(const GroupSpec& spec, SmallGroupKind kind) {
  validate_spec(spec);
  if (!named_pairing_valid(spec, kind))
    throw std::invalid_argument("named_index_two_part: no such pairing for " + to_string(spec));
  const uint32_t vg = order_2part(spec);
  const uint32_t vh = v2(order_small(kind, spec.q));
  if (vg < vh)
    throw std::invalid_argument("named_index_two_part: |H|_2 exceeds |G|_2");
  return ExactInt::power_of_two(vg - vh);
}

ExactInt named_index_two_part_display(const GroupSpec& spec, SmallGroupKind kind) {
  validate_spec(spec);
  const uint64_t q = spec.q;
  if (kind == SmallGroupKind::omega7_2 && named_pairing_valid(spec, kind)) {
    const ExactInt num = tp(qpow_minus_1(q, 6)) * tp(qpow_minus_1(q, 4)) * tp(qpow_minus_1(q, 2));
    return power_of_two_quotient(num, ExactInt::power_of_two(10));
  }
  if (kind == SmallGroupKind::omega8_plus_2 && named_pairing_valid(spec, kind)) {
    const ExactInt num = tp(qpow_minus_1(q, 4)) * tp(qpow_minus_1(q, 6)) *
                         tp(qpow_minus_1(q, 4)) * tp(qpow_minus_1(q, 2));
    return power_of_two_quotient(num, ExactInt::power_of_two(14));
  }
  throw std::invalid_argument("named_index_two_part_display: only the fixed orthogonal pairings");
}

ParityCertificate named_index_certificate(const GroupSpec& spec, SmallGroupKind kind) {
  validate_spec(spec);
  if (!named_pairing_valid(spec, kind))
    throw std::invalid_argument("named_index_certificate: no such pairing");
  ParityCertificate cert;
  cert.method = CertMethod::order_quotient;
  const ExactInt g = order_simple(spec);
  const ExactInt h = order_small(kind, spec.q);
  const ExactInt index = g.exact_div(h);
  cert.trace.push_back({"|G|", g});
  cert.trace.push_back({"|H|", h});
  cert.trace.push_back({"|G:H| = |G|/|H|", index});
  cert.trace.push_back({"(|G:H|)_2", two_part(index)});
  cert.index_v2 = v2(index);
  return cert;
}

}  // namespace oia
