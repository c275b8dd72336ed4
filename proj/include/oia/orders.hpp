#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "oia/arith.hpp"
#include "oia/exact_int.hpp"
#include "oia/forms.hpp"

namespace oia {

enum class Family : uint8_t { linear, unitary, symplectic, orthogonal_odd, orthogonal_even };

/// A finite simple classical group over a field of odd order q.
struct GroupSpec {
  Family family = Family::linear;
  uint32_t n = 0;
  uint64_t q = 0;
  std::optional<Sign> sign;  // orthogonal_even only

  FormKind form_kind() const;
  /// Ambient discriminant for orthogonal_even specs, derived from (n, q, sign).
  Disc ambient_disc() const;
};

/// Throws std::invalid_argument naming the violated bound:
/// PSL_n n >= 2 with (n,q) != (2,3); PSU_n n >= 3; PSp_n even n >= 4;
/// POmega_n odd n >= 7; POmega_n^eps even n >= 8; q an odd prime power.
void validate_spec(const GroupSpec& spec);

std::string to_string(const GroupSpec& spec);
const char* family_token(Family f, std::optional<Sign> sign);  // psl/psu/psp/omega/omega+/omega-

/// Exact order of the simple group.
ExactInt order_simple(const GroupSpec& spec);

/// Exact order of the full isometry group of the formed space:
/// GL_n(q), GU_n(q), Sp_n(q), O_n(q), O_n^eps(q). Linear takes no sign;
/// orthogonal even dimension requires one. dim 0 gives 1, odd orthogonal
/// dim 1 gives 2.
ExactInt order_isometry(Family family, uint32_t n, uint64_t q, std::optional<Sign> sign);

/// Same, keyed by a subspace descriptor inside an ambient orthogonal space.
ExactInt order_isometry(FormKind kind, uint32_t dim, uint64_t q, std::optional<Sign> sign);

/// The fixed small groups named by the classification.
enum class SmallGroupKind : uint8_t {
  a4,
  s4,
  a5,
  dihedral_q_plus_1,
  pgl2_root,
  m10,
  extraspecial_2_4_a6,  // 2^4.A_6
  extraspecial_2_4_a5,  // 2^4.A_5
  psp4_dot_2,           // PSp_4(q).2
  omega7_2,             // Omega_7(2)
  omega8_plus_2,        // Omega_8^+(2)
  field_aut_centralizer,
};

const char* to_string(SmallGroupKind k);

/// Exact order of a named subgroup in the context of ambient field size q.
/// dihedral_q_plus_1 and psp4_dot_2 depend on q; pgl2_root requires q to be
/// a square. field_aut_centralizer orders are family-dependent and not
/// tabulated here; asking for one is an error.
ExactInt order_small(SmallGroupKind kind, uint64_t ambient_q);

/// v2 of the simple group order.
uint32_t order_2part(const GroupSpec& spec);

/// Integer square root helper; returns nullopt when q is not a perfect square.
std::optional<uint64_t> exact_sqrt(uint64_t q);

}  // namespace oia
