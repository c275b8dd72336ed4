#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oia/forms.hpp"
#include "oia/orders.hpp"
#include "oia/parity.hpp"

namespace oia {

/// Centralizer of a field automorphism of order r, where q = q0^r.
struct FieldAutDesc {
  uint64_t r = 0;
  uint64_t q0 = 0;
  bool operator==(const FieldAutDesc&) const = default;
};

/// Stabilizer of a subspace of dimension m (non-degenerate for formed
/// families). Orthogonal subspaces carry their invariants: sign for even m
/// (disc is then derived), nothing for odd m, whose two discriminant
/// classes are swapped by a similarity and share their verdicts.
struct SubspaceStabDesc {
  uint32_t m = 0;
  std::optional<Disc> disc;
  std::optional<Sign> sign;
  bool operator==(const SubspaceStabDesc&) const = default;
};

/// Stabilizer of a decomposition of V into t = n/m isometric summands of
/// dimension m; even orthogonal summands carry their common sign.
struct DecompStabDesc {
  uint32_t m = 0;
  uint32_t t = 0;
  std::optional<Sign> part_sign;
  bool operator==(const DecompStabDesc&) const = default;
};

struct NamedDesc {
  SmallGroupKind kind = SmallGroupKind::a4;
  bool operator==(const NamedDesc&) const = default;
};

using SubgroupDescriptor = std::variant<FieldAutDesc, SubspaceStabDesc, DecompStabDesc, NamedDesc>;

struct Condition {
  std::string name;
  bool holds = false;
  bool operator==(const Condition&) const = default;
};

struct ClassificationEntry {
  SubgroupDescriptor descriptor;
  int item = 0;
  std::string subitem;  // "", "i", "ii", "iii"
  std::vector<Condition> conditions;
  std::string structure;
  std::optional<ParityCertificate> certificate;
};

struct CheckVerdict {
  bool maximal_odd_index = false;
  std::optional<int> item;  // the matched (or best-matching) classification item
  std::string subitem;
  std::vector<Condition> conditions;
  std::vector<std::string> failed_conditions;
};

/// All well-formed candidate subgroups of the given simple group: field
/// automorphism centralizers, subspace stabilizers in canonical form,
/// stabilizers of admissible isometric decompositions, and the named small
/// groups paired with this family and dimension.
std::vector<SubgroupDescriptor> candidates(const GroupSpec& spec);

/// The classification: exactly the candidates satisfying their item's
/// conditions, sorted by item. Subspace-stabilizer entries carry orbit
/// parity certificates; named entries carry order-quotient certificates.
std::vector<ClassificationEntry> classify(const GroupSpec& spec);

/// Verdict for one descriptor: whether it is a maximal subgroup of odd
/// index, under which item, and which conditions fail otherwise. Throws on
/// descriptors that name no actual subgroup of the group.
CheckVerdict check(const GroupSpec& spec, const SubgroupDescriptor& d);

/// Canonical representative of a subspace stabilizer: the stabilizer of U
/// equals the stabilizer of its perp, so formed families keep one side.
/// Unitary/symplectic keep m <= n/2; orthogonal groups of odd dimension
/// keep the even-dimensional side; even orthogonal groups with nonsquare
/// ambient discriminant keep the side with nonsquare subspace discriminant,
/// otherwise the side with m <= n/2. Linear descriptors are untouched.
SubspaceStabDesc canonicalize(const GroupSpec& spec, const SubspaceStabDesc& d);

/// Colon-delimited descriptor grammar:
///   fieldaut:r | subspace:m[:disc:sign] | decomp:m[:sign] | named:KIND
std::string descriptor_to_string(const SubgroupDescriptor& d);
SubgroupDescriptor parse_descriptor(const GroupSpec& spec, std::string_view text);

/// Validates that the descriptor names an existing subgroup of the group
/// (divisibility, admissible invariants, valid named pairing) and returns
/// its canonical form. Throws std::invalid_argument otherwise.
SubgroupDescriptor validate_descriptor(const GroupSpec& spec, const SubgroupDescriptor& d);

}  // namespace oia
