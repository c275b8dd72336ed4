#include "oia/forms.hpp"

#include <stdexcept>

namespace oia {

const char* to_string(Disc d) { return d == Disc::square ? "+1" : "-1"; }
const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::linear: return "linear";
    case FormKind::unitary: return "unitary";
    case FormKind::symplectic: return "symplectic";
    case FormKind::orthogonal: return "orthogonal";
  }
  return "?";
}

Disc discriminant_even(uint32_t m, uint64_t q, Sign v) {
  if (m == 0 || m % 2 != 0)
    throw std::invalid_argument("discriminant_even: dimension must be even and positive");
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument("discriminant_even: q must be odd, q >= 3");
  // (q-1)m/4 is an integer: q odd, m even.
  const uint64_t e = (q - 1) / 2 * static_cast<uint64_t>(m / 2);
  const bool even_exponent = (e % 2 == 0);
  if (v == Sign::plus) return even_exponent ? Disc::square : Disc::nonsquare;
  return even_exponent ? Disc::nonsquare : Disc::square;
}

void FormSpace::validate(uint64_t q) const {
  const bool even = (dim % 2 == 0);
  if (sign.has_value() && !(kind == FormKind::orthogonal && even))
    throw std::invalid_argument("FormSpace: sign only for even orthogonal dimension");
  if (disc.has_value() && kind != FormKind::orthogonal)
    throw std::invalid_argument("FormSpace: disc only for orthogonal spaces");
  if (kind == FormKind::orthogonal && even && dim > 0) {
    if (!sign.has_value())
      throw std::invalid_argument("FormSpace: even orthogonal subspace needs a sign");
    if (disc.has_value() && *disc != discriminant_even(dim, q, *sign))
      throw std::invalid_argument("FormSpace: disc inconsistent with dimension/sign");
  }
  if (kind == FormKind::symplectic && dim % 2 != 0)
    throw std::invalid_argument("FormSpace: non-degenerate symplectic spaces have even dimension");
}

DecompositionCheck decomposition_admissible(uint32_t n, Sign eps, uint64_t q, uint32_t m,
                                            std::optional<Sign> part_sign) {
  if (m == 0 || n % m != 0)
    throw std::invalid_argument("decomposition_admissible: m must divide n");
  const uint32_t t = n / m;
  if (t < 2) throw std::invalid_argument("decomposition_admissible: need n/m >= 2");
  const Disc ambient = discriminant_even(n, q, eps);

  DecompositionCheck out;
  if (m % 2 != 0) {
    if (part_sign.has_value())
      throw std::invalid_argument("decomposition_admissible: odd summands carry no sign");
    // Odd-dimensional isometric summands force a square ambient discriminant.
    out.forced_ambient_disc = Disc::square;
    out.admissible = (ambient == Disc::square);
    return out;
  }
  if (!part_sign.has_value())
    throw std::invalid_argument("decomposition_admissible: even summands need a sign");
  out.admissible = (sign_power(*part_sign, t) == eps);
  out.forced_ambient_disc = disc_power(discriminant_even(m, q, *part_sign), t);
  return out;
}

}  // namespace oia
