#include "oia/orders.hpp"

#include <cmath>
#include <stdexcept>

namespace oia {

namespace {

ExactInt q_pow(uint64_t q, uint32_t e) { return ExactInt(q).pow(e); }

// prod_{i=lo..hi} (q^i - 1)
ExactInt product_qi_minus_1(uint64_t q, uint32_t lo, uint32_t hi) {
  ExactInt acc(1);
  for (uint32_t i = lo; i <= hi; ++i) acc *= q_pow(q, i) - ExactInt(1);
  return acc;
}

// prod_{i=lo..hi} (q^i - (-1)^i)
ExactInt product_qi_minus_sign(uint64_t q, uint32_t lo, uint32_t hi) {
  ExactInt acc(1);
  for (uint32_t i = lo; i <= hi; ++i) {
    ExactInt term = q_pow(q, i);
    if (i % 2 == 0)
      term -= ExactInt(1);
    else
      term += ExactInt(1);
    acc *= term;
  }
  return acc;
}

// prod_{i=1..k} (q^{2i} - 1)
ExactInt product_q2i_minus_1(uint64_t q, uint32_t k) {
  ExactInt acc(1);
  for (uint32_t i = 1; i <= k; ++i) acc *= q_pow(q, 2 * i) - ExactInt(1);
  return acc;
}

ExactInt order_sp(uint32_t n, uint64_t q) {
  const uint32_t k = n / 2;
  return q_pow(q, k * k) * product_q2i_minus_1(q, k);
}

ExactInt order_o_odd(uint32_t n, uint64_t q) {
  const uint32_t k = (n - 1) / 2;
  return ExactInt(2) * q_pow(q, k * k) * product_q2i_minus_1(q, k);
}

ExactInt order_o_even(uint32_t n, uint64_t q, Sign eps) {
  const uint32_t k = n / 2;
  ExactInt middle = q_pow(q, k);
  if (eps == Sign::plus)
    middle -= ExactInt(1);
  else
    middle += ExactInt(1);
  return ExactInt(2) * q_pow(q, k * (k - 1)) * middle * product_q2i_minus_1(q, k - 1);
}

}  // namespace

FormKind GroupSpec::form_kind() const {
  switch (family) {
    case Family::linear: return FormKind::linear;
    case Family::unitary: return FormKind::unitary;
    case Family::symplectic: return FormKind::symplectic;
    case Family::orthogonal_odd:
    case Family::orthogonal_even: return FormKind::orthogonal;
  }
  return FormKind::linear;
}

Disc GroupSpec::ambient_disc() const {
  if (family != Family::orthogonal_even || !sign.has_value())
    throw std::invalid_argument("ambient_disc: defined for even orthogonal groups only");
  return discriminant_even(n, q, *sign);
}

void validate_spec(const GroupSpec& spec) {
  factor_prime_power(spec.q);  // q must be an odd prime power >= 3
  const bool has_sign = spec.sign.has_value();
  switch (spec.family) {
    case Family::linear:
      if (spec.n < 2) throw std::invalid_argument("PSL_n(q) requires n >= 2");
      if (spec.n == 2 && spec.q == 3)
        throw std::invalid_argument("PSL_2(3) is excluded (not simple)");
      break;
    case Family::unitary:
      if (spec.n < 3) throw std::invalid_argument("PSU_n(q) requires n >= 3");
      break;
    case Family::symplectic:
      if (spec.n % 2 != 0 || spec.n < 4)
        throw std::invalid_argument("PSp_n(q) requires even n >= 4");
      break;
    case Family::orthogonal_odd:
      if (spec.n % 2 == 0 || spec.n < 7)
        throw std::invalid_argument("POmega_n(q) requires odd n >= 7");
      break;
    case Family::orthogonal_even:
      if (spec.n % 2 != 0 || spec.n < 8)
        throw std::invalid_argument("POmega_n^eps(q) requires even n >= 8");
      if (!has_sign) throw std::invalid_argument("POmega_n^eps(q) requires a sign");
      return;
  }
  if (has_sign) throw std::invalid_argument("only even orthogonal groups carry a sign");
}

const char* family_token(Family f, std::optional<Sign> sign) {
  switch (f) {
    case Family::linear: return "psl";
    case Family::unitary: return "psu";
    case Family::symplectic: return "psp";
    case Family::orthogonal_odd: return "omega";
    case Family::orthogonal_even:
      return (sign && *sign == Sign::minus) ? "omega-" : "omega+";
  }
  return "?";
}

std::string to_string(const GroupSpec& spec) {
  const std::string nq = "_" + std::to_string(spec.n) + "(" + std::to_string(spec.q) + ")";
  switch (spec.family) {
    case Family::linear: return "PSL" + nq;
    case Family::unitary: return "PSU" + nq;
    case Family::symplectic: return "PSp" + nq;
    case Family::orthogonal_odd: return "POmega" + nq;
    case Family::orthogonal_even:
      return std::string("POmega_") + std::to_string(spec.n) + "^" +
             (spec.sign && *spec.sign == Sign::minus ? "-" : "+") + "(" +
             std::to_string(spec.q) + ")";
  }
  return "?";
}

ExactInt order_simple(const GroupSpec& spec) {
  validate_spec(spec);
  const uint32_t n = spec.n;
  const uint64_t q = spec.q;
  switch (spec.family) {
    case Family::linear: {
      ExactInt num = q_pow(q, n * (n - 1) / 2) * product_qi_minus_1(q, 2, n);
      return num.exact_div(gcd(ExactInt(n), ExactInt(q - 1)));
    }
    case Family::unitary: {
      ExactInt num = q_pow(q, n * (n - 1) / 2) * product_qi_minus_sign(q, 2, n);
      return num.exact_div(gcd(ExactInt(n), ExactInt(q + 1)));
    }
    case Family::symplectic:
      return order_sp(n, q).exact_div(ExactInt(2));
    case Family::orthogonal_odd:
      return order_o_odd(n, q).exact_div(ExactInt(4));  // |O_n(q)| / (2 * 2)
    case Family::orthogonal_even: {
      const uint32_t k = n / 2;
      ExactInt middle = q_pow(q, k);
      if (*spec.sign == Sign::plus)
        middle -= ExactInt(1);
      else
        middle += ExactInt(1);
      ExactInt num = q_pow(q, k * (k - 1)) * middle * product_q2i_minus_1(q, k - 1);
      return num.exact_div(gcd(ExactInt(4), middle));
    }
  }
  throw std::logic_error("order_simple: unreachable");
}

ExactInt order_isometry(Family family, uint32_t n, uint64_t q, std::optional<Sign> sign) {
  if (n == 0) return ExactInt(1);
  switch (family) {
    case Family::linear:
      return q_pow(q, n * (n - 1) / 2) * product_qi_minus_1(q, 1, n);
    case Family::unitary:
      return q_pow(q, n * (n - 1) / 2) * product_qi_minus_sign(q, 1, n);
    case Family::symplectic:
      if (n % 2 != 0) throw std::invalid_argument("Sp_n(q) requires even n");
      return order_sp(n, q);
    case Family::orthogonal_odd:
    case Family::orthogonal_even:
      if (n % 2 == 0) {
        if (!sign.has_value())
          throw std::invalid_argument("O_n^eps(q) requires a sign for even n");
        return order_o_even(n, q, *sign);
      }
      return order_o_odd(n, q);
  }
  throw std::logic_error("order_isometry: unreachable");
}

ExactInt order_isometry(FormKind kind, uint32_t dim, uint64_t q, std::optional<Sign> sign) {
  switch (kind) {
    case FormKind::linear: return order_isometry(Family::linear, dim, q, std::nullopt);
    case FormKind::unitary: return order_isometry(Family::unitary, dim, q, std::nullopt);
    case FormKind::symplectic: return order_isometry(Family::symplectic, dim, q, std::nullopt);
    case FormKind::orthogonal:
      return order_isometry(dim % 2 == 0 ? Family::orthogonal_even : Family::orthogonal_odd,
                            dim, q, sign);
  }
  throw std::logic_error("order_isometry: unreachable");
}

const char* to_string(SmallGroupKind k) {
  switch (k) {
    case SmallGroupKind::a4: return "A_4";
    case SmallGroupKind::s4: return "S_4";
    case SmallGroupKind::a5: return "A_5";
    case SmallGroupKind::dihedral_q_plus_1: return "D_{q+1}";
    case SmallGroupKind::pgl2_root: return "PGL_2(q0)";
    case SmallGroupKind::m10: return "M_10";
    case SmallGroupKind::extraspecial_2_4_a6: return "2^4.A_6";
    case SmallGroupKind::extraspecial_2_4_a5: return "2^4.A_5";
    case SmallGroupKind::psp4_dot_2: return "PSp_4(q).2";
    case SmallGroupKind::omega7_2: return "Omega_7(2)";
    case SmallGroupKind::omega8_plus_2: return "Omega_8^+(2)";
    case SmallGroupKind::field_aut_centralizer: return "C_G(sigma)";
  }
  return "?";
}

std::optional<uint64_t> exact_sqrt(uint64_t q) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(q)));
  while (r > 0 && r * r > q) --r;
  while ((r + 1) * (r + 1) <= q) ++r;
  if (r * r == q) return r;
  return std::nullopt;
}

ExactInt order_small(SmallGroupKind kind, uint64_t ambient_q) {
  switch (kind) {
    case SmallGroupKind::a4: return ExactInt(12);
    case SmallGroupKind::s4: return ExactInt(24);
    case SmallGroupKind::a5: return ExactInt(60);
    case SmallGroupKind::m10: return ExactInt(720);
    case SmallGroupKind::extraspecial_2_4_a6: return ExactInt(5760);
    case SmallGroupKind::extraspecial_2_4_a5: return ExactInt(960);
    case SmallGroupKind::omega7_2: return ExactInt(1451520);
    case SmallGroupKind::omega8_plus_2: return ExactInt(174182400);
    case SmallGroupKind::dihedral_q_plus_1:
      if (ambient_q < 3) throw std::invalid_argument("order_small: D_{q+1} needs q");
      return ExactInt(ambient_q + 1);
    case SmallGroupKind::pgl2_root: {
      const auto q0 = exact_sqrt(ambient_q);
      if (!q0) throw std::invalid_argument("order_small: PGL_2(q0) needs a square q");
      return ExactInt(*q0) * (ExactInt(*q0).pow(2) - ExactInt(1));
    }
    case SmallGroupKind::psp4_dot_2: {
      GroupSpec psp4{Family::symplectic, 4, ambient_q, std::nullopt};
      return ExactInt(2) * order_simple(psp4);
    }
    case SmallGroupKind::field_aut_centralizer:
      throw std::invalid_argument(
          "order_small: field automorphism centralizer orders are family-dependent");
  }
  throw std::logic_error("order_small: unreachable");
}

uint32_t order_2part(const GroupSpec& spec) { return v2(order_simple(spec)); }

}  // namespace oia
