#include "oia/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace oia {

namespace {

bool is_power_of_two(uint64_t m) { return m != 0 && (m & (m - 1)) == 0; }

// ---------------------------------------------------------------------------
// Condition tables
// ---------------------------------------------------------------------------

enum class DescKind : uint8_t { field_aut, subspace, decomp, named };

struct EvalCtx {
  const GroupSpec& spec;
  uint64_t p = 0;
  uint32_t a = 0;  // q = p^a
  const FieldAutDesc* fa = nullptr;
  const SubspaceStabDesc* ss = nullptr;
  const DecompStabDesc* ds = nullptr;
  const NamedDesc* nd = nullptr;

  uint64_t q() const { return spec.q; }
  uint32_t n() const { return spec.n; }
  uint32_t m() const { return ss ? ss->m : ds->m; }
  bool q_prime() const { return a == 1; }
  Disc disc_V() const { return spec.ambient_disc(); }
  Disc disc_U() const {
    if (ss && ss->disc) return *ss->disc;
    return discriminant_even(m(), q(), *sign_U());
  }
  std::optional<Sign> sign_U() const { return ss ? ss->sign : ds->part_sign; }
};

using Pred = std::function<bool(const EvalCtx&)>;

struct CondSpec {
  const char* name;
  Pred eval;
};

struct ItemRow {
  int item;
  const char* subitem;
  DescKind kind;
  Pred guard;  // which descriptors of that kind the row covers
  std::optional<SmallGroupKind> named;
  std::vector<CondSpec> conditions;
};

Pred always() {
  return [](const EvalCtx&) { return true; };
}

bool q_mod_in(uint64_t q, uint64_t mod, std::initializer_list<uint64_t> residues) {
  const uint64_t r = q % mod;
  for (uint64_t v : residues)
    if (r == v) return true;
  return false;
}

const CondSpec cond_q_prime{"q prime", [](const EvalCtx& c) { return c.q_prime(); }};
const CondSpec cond_pm3_mod8{"q == +-3 (mod 8)",
                             [](const EvalCtx& c) { return q_mod_in(c.q(), 8, {3, 5}); }};
const CondSpec cond_m_pow2{"m = 2^w >= 2",
                           [](const EvalCtx& c) { return c.m() >= 2 && is_power_of_two(c.m()); }};
const CondSpec cond_m_is_1{"m = 1", [](const EvalCtx& c) { return c.m() == 1; }};

std::vector<ItemRow> build_rows(Family family) {
  std::vector<ItemRow> rows;

  // Item (1): field automorphism centralizers, every family.
  rows.push_back({1,
                  "",
                  DescKind::field_aut,
                  always(),
                  std::nullopt,
                  {{"r is an odd prime",
                    [](const EvalCtx& c) { return c.fa->r % 2 == 1 && is_prime(c.fa->r); }}}});

  switch (family) {
    case Family::linear:
      rows.push_back({2,
                      "",
                      DescKind::subspace,
                      always(),
                      std::nullopt,
                      {{"n dominates m",
                        [](const EvalCtx& c) { return dominates(c.m(), c.n()); }}}});
      rows.push_back({6,
                      "i",
                      DescKind::decomp,
                      [](const EvalCtx& c) { return c.m() >= 2; },
                      std::nullopt,
                      {cond_m_pow2,
                       {"(n,m,q) != (4,2,3)",
                        [](const EvalCtx& c) {
                          return !(c.n() == 4 && c.m() == 2 && c.q() == 3);
                        }}}});
      rows.push_back({6,
                      "ii",
                      DescKind::decomp,
                      [](const EvalCtx& c) { return c.m() == 1; },
                      std::nullopt,
                      {{"q == 1 (mod 4)", [](const EvalCtx& c) { return c.q() % 4 == 1; }},
                       {"(n,q) != (4,5)",
                        [](const EvalCtx& c) { return !(c.n() == 4 && c.q() == 5); }},
                       {"q >= 13 when n = 2",
                        [](const EvalCtx& c) { return c.n() != 2 || c.q() >= 13; }}}});
      rows.push_back({11,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::pgl2_root,
                      {{"q is a square", [](const EvalCtx& c) { return c.a % 2 == 0; }}}});
      rows.push_back({12,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::a4,
                      {cond_q_prime,
                       {"q = 5 or q == +-3, +-13 (mod 40)", [](const EvalCtx& c) {
                          return c.q() == 5 || q_mod_in(c.q(), 40, {3, 13, 27, 37});
                        }}}});
      rows.push_back({13,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::s4,
                      {cond_q_prime, {"q == +-7 (mod 16)", [](const EvalCtx& c) {
                                        return q_mod_in(c.q(), 16, {7, 9});
                                      }}}});
      rows.push_back({14,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::a5,
                      {cond_q_prime,
                       {"q == +-11, +-19 (mod 40)", [](const EvalCtx& c) {
                          return q_mod_in(c.q(), 40, {11, 19, 21, 29});
                        }}}});
      rows.push_back({15,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::dihedral_q_plus_1,
                      {{"q not in {7, 9}",
                        [](const EvalCtx& c) { return c.q() != 7 && c.q() != 9; }},
                       {"q > 7", [](const EvalCtx& c) { return c.q() > 7; }},
                       {"q == 3 (mod 4)", [](const EvalCtx& c) { return c.q() % 4 == 3; }}}});
      rows.push_back({17,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::extraspecial_2_4_a6,
                      {cond_q_prime,
                       {"q == 5 (mod 8)", [](const EvalCtx& c) { return c.q() % 8 == 5; }}}});
      rows.push_back({18,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::psp4_dot_2,
                      {{"q == 3 (mod 4)", [](const EvalCtx& c) { return c.q() % 4 == 3; }}}});
      break;

    case Family::unitary:
      rows.push_back({3,
                      "",
                      DescKind::subspace,
                      always(),
                      std::nullopt,
                      {{"n dominates m",
                        [](const EvalCtx& c) { return dominates(c.m(), c.n()); }}}});
      rows.push_back({7,
                      "i",
                      DescKind::decomp,
                      [](const EvalCtx& c) { return c.m() >= 2; },
                      std::nullopt,
                      {cond_m_pow2}});
      rows.push_back({7,
                      "ii",
                      DescKind::decomp,
                      [](const EvalCtx& c) { return c.m() == 1; },
                      std::nullopt,
                      {{"q == 3 (mod 4)", [](const EvalCtx& c) { return c.q() % 4 == 3; }},
                       {"(n,q) != (4,3)",
                        [](const EvalCtx& c) { return !(c.n() == 4 && c.q() == 3); }}}});
      rows.push_back({16,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::m10,
                      {{"q = 5", [](const EvalCtx& c) { return c.q() == 5; }}}});
      rows.push_back({19,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::extraspecial_2_4_a6,
                      {cond_q_prime,
                       {"q == 3 (mod 8)", [](const EvalCtx& c) { return c.q() % 8 == 3; }}}});
      rows.push_back({20,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::psp4_dot_2,
                      {{"q == 1 (mod 4)", [](const EvalCtx& c) { return c.q() % 4 == 1; }}}});
      break;

    case Family::symplectic:
      rows.push_back({3,
                      "",
                      DescKind::subspace,
                      always(),
                      std::nullopt,
                      {{"n dominates m",
                        [](const EvalCtx& c) { return dominates(c.m(), c.n()); }}}});
      rows.push_back({8, "", DescKind::decomp, always(), std::nullopt, {cond_m_pow2}});
      rows.push_back({21,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::extraspecial_2_4_a5,
                      {cond_q_prime, cond_pm3_mod8}});
      break;

    case Family::orthogonal_odd:
      rows.push_back({4,
                      "",
                      DescKind::subspace,
                      always(),
                      std::nullopt,
                      {{"D(U) = 1",
                        [](const EvalCtx& c) { return c.disc_U() == Disc::square; }},
                       {"n dominates m",
                        [](const EvalCtx& c) { return dominates(c.m(), c.n()); }}}});
      rows.push_back({9,
                      "",
                      DescKind::decomp,
                      always(),
                      std::nullopt,
                      {cond_m_is_1, cond_q_prime, cond_pm3_mod8}});
      rows.push_back({22,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::omega7_2,
                      {cond_q_prime, cond_pm3_mod8}});
      break;

    case Family::orthogonal_even:
      rows.push_back({5,
                      "i",
                      DescKind::subspace,
                      [](const EvalCtx& c) { return c.m() % 2 == 1; },
                      std::nullopt,
                      {{"D(V) = -1",
                        [](const EvalCtx& c) { return c.disc_V() == Disc::nonsquare; }},
                       {"n-2 dominates m-1",
                        [](const EvalCtx& c) { return dominates(c.m() - 1, c.n() - 2); }}}});
      rows.push_back({5,
                      "ii",
                      DescKind::subspace,
                      [](const EvalCtx& c) { return c.m() % 2 == 0; },
                      std::nullopt,
                      {{"D(U) = -1",
                        [](const EvalCtx& c) { return c.disc_U() == Disc::nonsquare; }},
                       {"D(V) = -1",
                        [](const EvalCtx& c) { return c.disc_V() == Disc::nonsquare; }},
                       {"n-2 dominates m-2",
                        [](const EvalCtx& c) { return dominates(c.m() - 2, c.n() - 2); }},
                       {"(q,m,sgn(U)) != (3,2,+)",
                        [](const EvalCtx& c) {
                          return !(c.q() == 3 && c.m() == 2 && *c.sign_U() == Sign::plus);
                        }},
                       {"m = n/2 implies eps = -",
                        [](const EvalCtx& c) {
                          return 2 * c.m() != c.n() || *c.spec.sign == Sign::minus;
                        }}}});
      rows.push_back({5,
                      "iii",
                      DescKind::subspace,
                      [](const EvalCtx& c) { return c.m() % 2 == 0; },
                      std::nullopt,
                      {{"D(U) = 1",
                        [](const EvalCtx& c) { return c.disc_U() == Disc::square; }},
                       {"D(V) = 1",
                        [](const EvalCtx& c) { return c.disc_V() == Disc::square; }},
                       {"n dominates m",
                        [](const EvalCtx& c) { return dominates(c.m(), c.n()); }}}});
      rows.push_back({10,
                      "i",
                      DescKind::decomp,
                      [](const EvalCtx& c) { return c.m() % 2 == 0; },
                      std::nullopt,
                      {{"D(V) = 1",
                        [](const EvalCtx& c) { return c.disc_V() == Disc::square; }},
                       cond_m_pow2,
                       {"D(V_i) = 1",
                        [](const EvalCtx& c) {
                          return discriminant_even(c.m(), c.q(), *c.sign_U()) == Disc::square;
                        }},
                       {"(m,q,sgn(V_i)) != (2,3,-), (2,5,+)",
                        [](const EvalCtx& c) {
                          const bool bad1 =
                              c.m() == 2 && c.q() == 3 && *c.sign_U() == Sign::minus;
                          const bool bad2 =
                              c.m() == 2 && c.q() == 5 && *c.sign_U() == Sign::plus;
                          return !bad1 && !bad2;
                        }}}});
      rows.push_back({10,
                      "ii",
                      DescKind::decomp,
                      [](const EvalCtx& c) { return c.m() % 2 == 1; },
                      std::nullopt,
                      {{"D(V) = 1",
                        [](const EvalCtx& c) { return c.disc_V() == Disc::square; }},
                       {"(n,eps) != (8,+)",
                        [](const EvalCtx& c) {
                          return !(c.n() == 8 && *c.spec.sign == Sign::plus);
                        }},
                       cond_m_is_1,
                       cond_q_prime,
                       cond_pm3_mod8}});
      rows.push_back({23,
                      "",
                      DescKind::named,
                      always(),
                      SmallGroupKind::omega8_plus_2,
                      {cond_q_prime, cond_pm3_mod8}});
      break;
  }
  return rows;
}

const std::vector<ItemRow>& rows_for(Family family) {
  static const std::vector<ItemRow> linear = build_rows(Family::linear);
  static const std::vector<ItemRow> unitary = build_rows(Family::unitary);
  static const std::vector<ItemRow> symplectic = build_rows(Family::symplectic);
  static const std::vector<ItemRow> orth_odd = build_rows(Family::orthogonal_odd);
  static const std::vector<ItemRow> orth_even = build_rows(Family::orthogonal_even);
  switch (family) {
    case Family::linear: return linear;
    case Family::unitary: return unitary;
    case Family::symplectic: return symplectic;
    case Family::orthogonal_odd: return orth_odd;
    case Family::orthogonal_even: return orth_even;
  }
  throw std::logic_error("rows_for: unreachable");
}

DescKind kind_of(const SubgroupDescriptor& d) {
  if (std::holds_alternative<FieldAutDesc>(d)) return DescKind::field_aut;
  if (std::holds_alternative<SubspaceStabDesc>(d)) return DescKind::subspace;
  if (std::holds_alternative<DecompStabDesc>(d)) return DescKind::decomp;
  return DescKind::named;
}

EvalCtx make_ctx(const GroupSpec& spec, const SubgroupDescriptor& d) {
  const PrimePower pp = factor_prime_power(spec.q);
  EvalCtx ctx{spec, pp.p, pp.exponent};
  ctx.fa = std::get_if<FieldAutDesc>(&d);
  ctx.ss = std::get_if<SubspaceStabDesc>(&d);
  ctx.ds = std::get_if<DecompStabDesc>(&d);
  ctx.nd = std::get_if<NamedDesc>(&d);
  return ctx;
}

// ---------------------------------------------------------------------------
// Structure strings
// ---------------------------------------------------------------------------

std::string wr_structure(const char* base, uint32_t m, uint64_t q, uint32_t t,
                         const char* sup = "") {
  return std::string(base) + "_" + std::to_string(m) + sup + "(" + std::to_string(q) +
         ") wr Sym(" + std::to_string(t) + ")";
}

std::string structure_string(const GroupSpec& spec, const SubgroupDescriptor& d) {
  if (const auto* fa = std::get_if<FieldAutDesc>(&d)) {
    return "C_G(sigma), sigma of order " + std::to_string(fa->r) + ", subfield F_" +
           std::to_string(fa->q0);
  }
  if (const auto* ss = std::get_if<SubspaceStabDesc>(&d)) {
    const std::string dims =
        std::to_string(ss->m) + "," + std::to_string(spec.n - ss->m);
    switch (spec.family) {
      case Family::linear:
        return "P_" + std::to_string(ss->m) + " (stabilizer of a " + std::to_string(ss->m) +
               "-subspace)";
      case Family::unitary:
        return "stabilizer of a non-degenerate subspace (GU_" + dims + " type)";
      case Family::symplectic:
        return "stabilizer of a non-degenerate subspace (Sp_" + dims + " type)";
      default: {
        std::string inv;
        if (ss->sign) inv = std::string(", sgn(U) = ") + to_string(*ss->sign);
        const std::string disc =
            ss->disc ? std::string(", D(U) = ") + to_string(*ss->disc) : std::string();
        return "stabilizer of a non-degenerate " + std::to_string(ss->m) + "-subspace" +
               disc + inv + " (O_" + dims + " type)";
      }
    }
  }
  if (const auto* ds = std::get_if<DecompStabDesc>(&d)) {
    switch (spec.family) {
      case Family::linear: return wr_structure("GL", ds->m, spec.q, ds->t);
      case Family::unitary: return wr_structure("GU", ds->m, spec.q, ds->t);
      case Family::symplectic: return wr_structure("Sp", ds->m, spec.q, ds->t);
      default:
        if (ds->part_sign)
          return wr_structure("O", ds->m, spec.q, ds->t,
                              *ds->part_sign == Sign::plus ? "^+" : "^-");
        return wr_structure("O", ds->m, spec.q, ds->t);
    }
  }
  const auto& nd = std::get<NamedDesc>(d);
  switch (nd.kind) {
    case SmallGroupKind::pgl2_root:
      return "PGL_2(" + std::to_string(*exact_sqrt(spec.q)) + ")";
    case SmallGroupKind::dihedral_q_plus_1:
      return "D_" + std::to_string(spec.q + 1) + " (dihedral)";
    case SmallGroupKind::psp4_dot_2:
      return "PSp_4(" + std::to_string(spec.q) + ").2";
    default:
      return to_string(nd.kind);
  }
}

// ---------------------------------------------------------------------------
// Candidate generation
// ---------------------------------------------------------------------------

void push_field_aut_candidates(const GroupSpec& spec, std::vector<SubgroupDescriptor>& out) {
  const PrimePower pp = factor_prime_power(spec.q);
  for (uint32_t r = 3; r <= pp.exponent; r += 2) {
    if (pp.exponent % r == 0 && is_prime(r)) {
      uint64_t q0 = 1;
      for (uint32_t i = 0; i < pp.exponent / r; ++i) q0 *= pp.p;
      out.push_back(FieldAutDesc{r, q0});
    }
  }
}

void push_subspace_candidates(const GroupSpec& spec, std::vector<SubgroupDescriptor>& out) {
  const uint32_t n = spec.n;
  switch (spec.family) {
    case Family::linear:
      for (uint32_t m = 1; m < n; ++m) out.push_back(SubspaceStabDesc{m, {}, {}});
      break;
    case Family::unitary:
      for (uint32_t m = 1; m <= n / 2; ++m) out.push_back(SubspaceStabDesc{m, {}, {}});
      break;
    case Family::symplectic:
      for (uint32_t m = 2; m <= n / 2; m += 2) out.push_back(SubspaceStabDesc{m, {}, {}});
      break;
    case Family::orthogonal_odd:
      // Canonical side of each stabilizer is the even-dimensional one.
      for (uint32_t m = 2; m <= n - 1; m += 2)
        for (Sign s : {Sign::plus, Sign::minus})
          out.push_back(SubspaceStabDesc{m, discriminant_even(m, spec.q, s), s});
      break;
    case Family::orthogonal_even: {
      const Disc dV = spec.ambient_disc();
      for (uint32_t m = 1; m <= n / 2; m += 2) out.push_back(SubspaceStabDesc{m, {}, {}});
      if (dV == Disc::square) {
        // Complementary sides share their discriminant; keep m <= n/2.
        // (m = n/2 arises only with eps = +, where both sign classes are
        // self-paired.)
        for (uint32_t m = 2; m <= n / 2; m += 2)
          for (Sign s : {Sign::plus, Sign::minus})
            out.push_back(SubspaceStabDesc{m, discriminant_even(m, spec.q, s), s});
      } else {
        // Exactly one side of each complementary pair has nonsquare
        // discriminant; that side is the canonical representative.
        for (uint32_t m = 2; m <= n - 2; m += 2)
          for (Sign s : {Sign::plus, Sign::minus})
            if (discriminant_even(m, spec.q, s) == Disc::nonsquare)
              out.push_back(SubspaceStabDesc{m, Disc::nonsquare, s});
      }
      break;
    }
  }
}

void push_decomp_candidates(const GroupSpec& spec, std::vector<SubgroupDescriptor>& out) {
  const uint32_t n = spec.n;
  for (uint32_t m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    const uint32_t t = n / m;
    switch (spec.family) {
      case Family::linear:
      case Family::unitary:
        out.push_back(DecompStabDesc{m, t, {}});
        break;
      case Family::symplectic:
        if (m % 2 == 0) out.push_back(DecompStabDesc{m, t, {}});
        break;
      case Family::orthogonal_odd:
        out.push_back(DecompStabDesc{m, t, {}});  // n odd, so every divisor is odd
        break;
      case Family::orthogonal_even:
        if (m % 2 == 1) {
          if (decomposition_admissible(n, *spec.sign, spec.q, m, std::nullopt).admissible)
            out.push_back(DecompStabDesc{m, t, {}});
        } else {
          for (Sign s : {Sign::plus, Sign::minus})
            if (decomposition_admissible(n, *spec.sign, spec.q, m, s).admissible)
              out.push_back(DecompStabDesc{m, t, s});
        }
        break;
    }
  }
}

void push_named_candidates(const GroupSpec& spec, std::vector<SubgroupDescriptor>& out) {
  auto add = [&](SmallGroupKind k) {
    if (named_pairing_valid(spec, k)) out.push_back(NamedDesc{k});
  };
  add(SmallGroupKind::pgl2_root);
  add(SmallGroupKind::a4);
  add(SmallGroupKind::s4);
  add(SmallGroupKind::a5);
  add(SmallGroupKind::dihedral_q_plus_1);
  add(SmallGroupKind::m10);
  add(SmallGroupKind::extraspecial_2_4_a6);
  add(SmallGroupKind::psp4_dot_2);
  add(SmallGroupKind::extraspecial_2_4_a5);
  add(SmallGroupKind::omega7_2);
  add(SmallGroupKind::omega8_plus_2);
}

// ---------------------------------------------------------------------------
// Sorting
// ---------------------------------------------------------------------------

struct SortKey {
  int item;
  int subitem_rank;
  int kind_rank;
  uint64_t a;
  uint64_t b;

  auto tie() const { return std::tie(item, subitem_rank, kind_rank, a, b); }
  bool operator<(const SortKey& o) const { return tie() < o.tie(); }
};

int subitem_rank(const std::string& s) {
  if (s.empty()) return 0;
  if (s == "i") return 1;
  if (s == "ii") return 2;
  return 3;
}

SortKey sort_key(const ClassificationEntry& e) {
  SortKey k{e.item, subitem_rank(e.subitem), 0, 0, 0};
  if (const auto* fa = std::get_if<FieldAutDesc>(&e.descriptor)) {
    k.kind_rank = 0;
    k.a = fa->r;
  } else if (const auto* ss = std::get_if<SubspaceStabDesc>(&e.descriptor)) {
    k.kind_rank = 1;
    k.a = ss->m;
    k.b = ss->sign && *ss->sign == Sign::minus ? 1 : 0;
  } else if (const auto* ds = std::get_if<DecompStabDesc>(&e.descriptor)) {
    k.kind_rank = 2;
    k.a = ds->m;
    k.b = ds->part_sign && *ds->part_sign == Sign::minus ? 1 : 0;
  } else {
    k.kind_rank = 3;
    k.a = static_cast<uint64_t>(std::get<NamedDesc>(e.descriptor).kind);
  }
  return k;
}

std::optional<ParityCertificate> make_certificate(const GroupSpec& spec,
                                                  const SubgroupDescriptor& d) {
  if (const auto* ss = std::get_if<SubspaceStabDesc>(&d)) {
    FormSpace sub{ss->m, spec.form_kind(), ss->disc, ss->sign};
    return subspace_orbit_certificate(spec, sub);
  }
  if (const auto* nd = std::get_if<NamedDesc>(&d)) {
    return named_index_certificate(spec, nd->kind);
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

std::vector<SubgroupDescriptor> candidates(const GroupSpec& spec) {
  validate_spec(spec);
  std::vector<SubgroupDescriptor> out;
  push_field_aut_candidates(spec, out);
  push_subspace_candidates(spec, out);
  push_decomp_candidates(spec, out);
  push_named_candidates(spec, out);
  return out;
}

SubspaceStabDesc canonicalize(const GroupSpec& spec, const SubspaceStabDesc& d) {
  validate_spec(spec);
  const uint32_t n = spec.n;
  const uint32_t m = d.m;
  if (m == 0 || m >= n) throw std::invalid_argument("canonicalize: need 0 < m < n");

  switch (spec.family) {
    case Family::linear:
      return d;  // m and n-m stabilizers are distinct parabolics
    case Family::unitary:
      return SubspaceStabDesc{std::min(m, n - m), {}, {}};
    case Family::symplectic:
      if (m % 2 != 0)
        throw std::invalid_argument("canonicalize: symplectic subspaces have even dimension");
      return SubspaceStabDesc{std::min(m, n - m), {}, {}};
    case Family::orthogonal_odd: {
      if (m % 2 != 0)
        throw std::invalid_argument(
            "canonicalize: odd-dimensional subspaces of an odd-dimensional orthogonal space "
            "are ambiguous; give the even-dimensional complement with its invariants");
      if (!d.sign)
        throw std::invalid_argument("canonicalize: even orthogonal subspace needs a sign");
      const Disc dU = discriminant_even(m, spec.q, *d.sign);
      if (d.disc && *d.disc != dU)
        throw std::invalid_argument("canonicalize: disc inconsistent with dimension/sign");
      return SubspaceStabDesc{m, dU, d.sign};
    }
    case Family::orthogonal_even: {
      if (m % 2 == 1) return SubspaceStabDesc{std::min(m, n - m), {}, {}};
      if (!d.sign)
        throw std::invalid_argument("canonicalize: even orthogonal subspace needs a sign");
      const Sign s = *d.sign;
      const Disc dU = discriminant_even(m, spec.q, s);
      if (d.disc && *d.disc != dU)
        throw std::invalid_argument("canonicalize: disc inconsistent with dimension/sign");
      const Disc dV = spec.ambient_disc();
      auto complement = [&]() {
        const Sign cs = *spec.sign * s;
        return SubspaceStabDesc{n - m, discriminant_even(n - m, spec.q, cs), cs};
      };
      if (dV == Disc::nonsquare) {
        // Canonical side carries the nonsquare discriminant.
        return dU == Disc::nonsquare ? SubspaceStabDesc{m, dU, s} : complement();
      }
      if (m > n - m) return complement();
      return SubspaceStabDesc{m, dU, s};
    }
  }
  throw std::logic_error("canonicalize: unreachable");
}

SubgroupDescriptor validate_descriptor(const GroupSpec& spec, const SubgroupDescriptor& d) {
  validate_spec(spec);
  if (const auto* fa = std::get_if<FieldAutDesc>(&d)) {
    const PrimePower pp = factor_prime_power(spec.q);
    if (fa->r < 2 || pp.exponent % fa->r != 0)
      throw std::invalid_argument("no field automorphism of order " + std::to_string(fa->r) +
                                  ": the field degree is " + std::to_string(pp.exponent));
    uint64_t q0 = 1;
    for (uint32_t i = 0; i < pp.exponent / fa->r; ++i) q0 *= pp.p;
    if (fa->q0 != 0 && fa->q0 != q0)
      throw std::invalid_argument("field automorphism subfield mismatch");
    return FieldAutDesc{fa->r, q0};
  }
  if (const auto* ss = std::get_if<SubspaceStabDesc>(&d)) {
    if (spec.form_kind() != FormKind::orthogonal && (ss->disc || ss->sign))
      throw std::invalid_argument("subspace invariants apply to orthogonal groups only");
    if (spec.form_kind() == FormKind::orthogonal && ss->m % 2 == 1 && (ss->disc || ss->sign))
      throw std::invalid_argument("odd-dimensional orthogonal subspaces carry no sign here");
    return canonicalize(spec, *ss);
  }
  if (const auto* ds = std::get_if<DecompStabDesc>(&d)) {
    if (ds->m == 0 || spec.n % ds->m != 0 || spec.n / ds->m < 2)
      throw std::invalid_argument("decomposition needs m | n with n/m >= 2");
    const uint32_t t = spec.n / ds->m;
    if (ds->t != 0 && ds->t != t) throw std::invalid_argument("decomposition t != n/m");
    switch (spec.family) {
      case Family::linear:
      case Family::unitary:
        if (ds->part_sign)
          throw std::invalid_argument("decomposition summands carry no sign in this family");
        break;
      case Family::symplectic:
        if (ds->m % 2 != 0)
          throw std::invalid_argument("symplectic summands have even dimension");
        if (ds->part_sign)
          throw std::invalid_argument("decomposition summands carry no sign in this family");
        break;
      case Family::orthogonal_odd:
        if (ds->part_sign)
          throw std::invalid_argument("odd-dimensional summands carry no sign");
        break;
      case Family::orthogonal_even: {
        const auto adm =
            decomposition_admissible(spec.n, *spec.sign, spec.q, ds->m, ds->part_sign);
        if (!adm.admissible)
          throw std::invalid_argument("no such decomposition: invariants are inadmissible");
        break;
      }
    }
    return DecompStabDesc{ds->m, t, ds->part_sign};
  }
  const auto& nd = std::get<NamedDesc>(d);
  if (!named_pairing_valid(spec, nd.kind))
    throw std::invalid_argument(std::string("named subgroup ") + to_string(nd.kind) +
                                " does not pair with " + to_string(spec));
  return nd;
}

namespace {

struct RowEval {
  const ItemRow* row;
  std::vector<Condition> conditions;
  size_t failed;
};

std::vector<RowEval> evaluate_rows(const GroupSpec& spec, const SubgroupDescriptor& d) {
  const EvalCtx ctx = make_ctx(spec, d);
  std::vector<RowEval> out;
  for (const ItemRow& row : rows_for(spec.family)) {
    if (row.kind != kind_of(d)) continue;
    if (row.kind == DescKind::named &&
        row.named != std::get<NamedDesc>(d).kind)
      continue;
    if (!row.guard(ctx)) continue;
    RowEval ev{&row, {}, 0};
    for (const CondSpec& cond : row.conditions) {
      const bool holds = cond.eval(ctx);
      ev.conditions.push_back({cond.name, holds});
      if (!holds) ++ev.failed;
    }
    out.push_back(std::move(ev));
  }
  return out;
}

}  // namespace

std::vector<ClassificationEntry> classify(const GroupSpec& spec) {
  std::vector<ClassificationEntry> out;
  for (const SubgroupDescriptor& d : candidates(spec)) {
    for (const RowEval& ev : evaluate_rows(spec, d)) {
      if (ev.failed != 0) continue;
      ClassificationEntry entry;
      entry.descriptor = d;
      entry.item = ev.row->item;
      entry.subitem = ev.row->subitem;
      entry.conditions = ev.conditions;
      entry.structure = structure_string(spec, d);
      entry.certificate = make_certificate(spec, d);
      out.push_back(std::move(entry));
      break;  // at most one row can pass; stop at the first
    }
  }
  std::sort(out.begin(), out.end(), [](const ClassificationEntry& x, const ClassificationEntry& y) {
    return sort_key(x) < sort_key(y);
  });
  return out;
}

CheckVerdict check(const GroupSpec& spec, const SubgroupDescriptor& d) {
  const SubgroupDescriptor canonical = validate_descriptor(spec, d);
  const auto evals = evaluate_rows(spec, canonical);
  if (evals.empty())
    throw std::invalid_argument("check: descriptor matches no classification item");

  CheckVerdict verdict;
  const RowEval* best = &evals.front();
  for (const RowEval& ev : evals) {
    if (ev.failed == 0) {
      best = &ev;
      break;
    }
    if (ev.failed < best->failed) best = &ev;
  }
  verdict.maximal_odd_index = (best->failed == 0);
  verdict.item = best->row->item;
  verdict.subitem = best->row->subitem;
  verdict.conditions = best->conditions;
  for (const Condition& c : best->conditions)
    if (!c.holds) verdict.failed_conditions.push_back(c.name);
  return verdict;
}

// ---------------------------------------------------------------------------
// Descriptor grammar
// ---------------------------------------------------------------------------

namespace {

const char* named_token(SmallGroupKind k) {
  switch (k) {
    case SmallGroupKind::a4: return "a4";
    case SmallGroupKind::s4: return "s4";
    case SmallGroupKind::a5: return "a5";
    case SmallGroupKind::dihedral_q_plus_1: return "dq+1";
    case SmallGroupKind::pgl2_root: return "pgl2";
    case SmallGroupKind::m10: return "m10";
    case SmallGroupKind::extraspecial_2_4_a6: return "2^4.a6";
    case SmallGroupKind::extraspecial_2_4_a5: return "2^4.a5";
    case SmallGroupKind::psp4_dot_2: return "psp4.2";
    case SmallGroupKind::omega7_2: return "omega7(2)";
    case SmallGroupKind::omega8_plus_2: return "omega8+(2)";
    case SmallGroupKind::field_aut_centralizer: return "fieldaut";
  }
  return "?";
}

std::optional<SmallGroupKind> parse_named_token(std::string token) {
  std::transform(token.begin(), token.end(), token.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (SmallGroupKind k :
       {SmallGroupKind::a4, SmallGroupKind::s4, SmallGroupKind::a5,
        SmallGroupKind::dihedral_q_plus_1, SmallGroupKind::pgl2_root, SmallGroupKind::m10,
        SmallGroupKind::extraspecial_2_4_a6, SmallGroupKind::extraspecial_2_4_a5,
        SmallGroupKind::psp4_dot_2, SmallGroupKind::omega7_2, SmallGroupKind::omega8_plus_2}) {
    if (token == named_token(k)) return k;
  }
  // A few forgiving aliases.
  if (token == "d_q+1" || token == "dihedral") return SmallGroupKind::dihedral_q_plus_1;
  if (token == "pgl_2" || token == "pgl2(q0)") return SmallGroupKind::pgl2_root;
  if (token == "2^4a6") return SmallGroupKind::extraspecial_2_4_a6;
  if (token == "2^4a5") return SmallGroupKind::extraspecial_2_4_a5;
  if (token == "psp4(q).2" || token == "psp_4(q).2") return SmallGroupKind::psp4_dot_2;
  if (token == "o7(2)") return SmallGroupKind::omega7_2;
  if (token == "o8+(2)") return SmallGroupKind::omega8_plus_2;
  return std::nullopt;
}

std::vector<std::string> split_colons(std::string_view s) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(':', start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

uint64_t parse_number(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string("descriptor: bad ") + what + " '" + s + "'");
  return std::stoull(s);
}

Disc parse_disc(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+") return Disc::square;
  if (s == "-1" || s == "-") return Disc::nonsquare;
  throw std::invalid_argument("descriptor: disc must be +1 or -1, got '" + s + "'");
}

Sign parse_sign(const std::string& s) {
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw std::invalid_argument("descriptor: sign must be + or -, got '" + s + "'");
}

constexpr const char* kGrammarHint =
    "expected fieldaut:r | subspace:m[:disc:sign] | decomp:m[:sign] | named:KIND";

}  // namespace

std::string descriptor_to_string(const SubgroupDescriptor& d) {
  if (const auto* fa = std::get_if<FieldAutDesc>(&d)) {
    return "fieldaut:" + std::to_string(fa->r);
  }
  if (const auto* ss = std::get_if<SubspaceStabDesc>(&d)) {
    std::string out = "subspace:" + std::to_string(ss->m);
    if (ss->disc && ss->sign)
      out += std::string(":") + to_string(*ss->disc) + ":" + to_string(*ss->sign);
    return out;
  }
  if (const auto* ds = std::get_if<DecompStabDesc>(&d)) {
    std::string out = "decomp:" + std::to_string(ds->m);
    if (ds->part_sign) out += std::string(":") + to_string(*ds->part_sign);
    return out;
  }
  return std::string("named:") + named_token(std::get<NamedDesc>(d).kind);
}

SubgroupDescriptor parse_descriptor(const GroupSpec& spec, std::string_view text) {
  const auto parts = split_colons(text);
  const std::string& head = parts.front();
  SubgroupDescriptor d;
  if (head == "fieldaut") {
    if (parts.size() != 2)
      throw std::invalid_argument(std::string("descriptor: ") + kGrammarHint);
    d = FieldAutDesc{parse_number(parts[1], "order r"), 0};
  } else if (head == "subspace") {
    if (parts.size() != 2 && parts.size() != 4)
      throw std::invalid_argument(std::string("descriptor: ") + kGrammarHint);
    SubspaceStabDesc ss{static_cast<uint32_t>(parse_number(parts[1], "dimension m")), {}, {}};
    if (parts.size() == 4) {
      ss.disc = parse_disc(parts[2]);
      ss.sign = parse_sign(parts[3]);
    } else if (spec.form_kind() == FormKind::orthogonal && ss.m % 2 == 0) {
      throw std::invalid_argument(
          "descriptor: even orthogonal subspaces need invariants, use subspace:m:disc:sign");
    }
    d = ss;
  } else if (head == "decomp") {
    if (parts.size() != 2 && parts.size() != 3)
      throw std::invalid_argument(std::string("descriptor: ") + kGrammarHint);
    DecompStabDesc ds{static_cast<uint32_t>(parse_number(parts[1], "dimension m")), 0, {}};
    if (parts.size() == 3) ds.part_sign = parse_sign(parts[2]);
    if (spec.family == Family::orthogonal_even && ds.m % 2 == 0 && !ds.part_sign)
      throw std::invalid_argument(
          "descriptor: even orthogonal summands need a sign, use decomp:m:sign");
    d = ds;
  } else if (head == "named") {
    if (parts.size() != 2)
      throw std::invalid_argument(std::string("descriptor: ") + kGrammarHint);
    const auto kind = parse_named_token(parts[1]);
    if (!kind)
      throw std::invalid_argument("descriptor: unknown named subgroup '" + parts[1] + "'");
    d = NamedDesc{*kind};
  } else {
    throw std::invalid_argument(std::string("descriptor: ") + kGrammarHint);
  }
  return validate_descriptor(spec, d);
}

}  // namespace oia
