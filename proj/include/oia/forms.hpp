#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace oia {

/// Square class of a discriminant: square = +1, nonsquare = -1.
/// Kept distinct from Sign on purpose: the two invariants are multiplied
/// only within their own kind, and mixing them is the classic mistake.
enum class Disc : int8_t { square = +1, nonsquare = -1 };

/// Witt-type sign of an even-dimensional orthogonal space.
enum class Sign : int8_t { plus = +1, minus = -1 };

constexpr Disc operator*(Disc a, Disc b) {
  return a == b ? Disc::square : Disc::nonsquare;
}
constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::plus : Sign::minus;
}

constexpr Disc disc_product(Disc a, Disc b) { return a * b; }
constexpr Sign sign_product(Sign a, Sign b) { return a * b; }

constexpr Disc disc_power(Disc d, uint32_t t) {
  return (t % 2 == 0) ? Disc::square : d;
}
constexpr Sign sign_power(Sign s, uint32_t t) {
  return (t % 2 == 0) ? Sign::plus : s;
}

const char* to_string(Disc d);  // "+1" / "-1"
const char* to_string(Sign s);  // "+" / "-"

/// Discriminant of a non-degenerate even-dimensional orthogonal space of
/// dimension m and sign v over F_q (odd q):
///   square    if v = + and (q-1)m/4 is even, or v = - and (q-1)m/4 is odd;
///   nonsquare otherwise.
Disc discriminant_even(uint32_t m, uint64_t q, Sign v);

enum class FormKind : uint8_t { linear, unitary, symplectic, orthogonal };

const char* to_string(FormKind k);

/// Descriptor of a formed subspace: dimension plus, for orthogonal spaces,
/// the discriminant and (even dimension only) the sign.
struct FormSpace {
  uint32_t dim = 0;
  FormKind kind = FormKind::linear;
  std::optional<Disc> disc;
  std::optional<Sign> sign;

  /// Checks the field/kind constraints: sign present iff orthogonal of even
  /// dimension; disc only for orthogonal; for even orthogonal dimension the
  /// disc must match discriminant_even(dim, q, sign).
  void validate(uint64_t q) const;
};

struct DecompositionCheck {
  bool admissible = false;
  Disc forced_ambient_disc = Disc::square;
};

/// Whether an ambient even-dimensional orthogonal space of dimension n,
/// sign eps over F_q decomposes into n/m isometric non-degenerate summands
/// of dimension m (with the given summand sign when m is even).
/// Odd m forces ambient discriminant square; even m requires
/// eps = part_sign^(n/m). m must divide n with n/m >= 2.
DecompositionCheck decomposition_admissible(uint32_t n, Sign eps, uint64_t q, uint32_t m,
                                            std::optional<Sign> part_sign);

}  // namespace oia
