#include "oia/verify.hpp"

#include <stdexcept>

#include "oia/arith.hpp"
#include "oia/forms.hpp"
#include "oia/oracle.hpp"
#include "oia/orders.hpp"
#include "oia/parity.hpp"

namespace oia {

bool Report::all_pass() const {
  for (const CheckLine& l : lines)
    if (!l.pass) return false;
  return true;
}

size_t Report::failures() const {
  size_t n = 0;
  for (const CheckLine& l : lines)
    if (!l.pass) ++n;
  return n;
}

void Report::add(std::string name, bool pass, std::string detail) {
  lines.push_back({std::move(name), pass, std::move(detail)});
}

std::vector<uint64_t> odd_prime_powers_up_to(uint64_t qmax) {
  std::vector<uint64_t> out;
  for (uint64_t q = 3; q <= qmax; q += 2) {
    try {
      factor_prime_power(q);
      out.push_back(q);
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// arith
// ---------------------------------------------------------------------------

Report verify_arith() {
  Report report;

  {
    bool ok = true;
    std::string bad;
    for (uint32_t n = 0; n <= 24 && ok; ++n)
      for (uint32_t m = 0; m <= n && ok; ++m)
        if (binomial(n, m).is_odd() != dominates(m, n)) {
          ok = false;
          bad = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        }
    report.add("binomial parity == dominance for n <= 24", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (uint64_t q : {3, 5, 7, 9, 11, 13})
      for (uint32_t n = 0; n <= 24 && ok; ++n)
        for (uint32_t m = 0; m <= n && ok; ++m)
          if (gaussian_binomial(n, m, ExactInt(q)).is_odd() != dominates(m, n)) {
            ok = false;
            bad = "(n,m,q) = (" + std::to_string(n) + "," + std::to_string(m) + "," +
                  std::to_string(q) + ")";
          }
    report.add("gaussian binomial parity == dominance for n <= 24, q in {3,5,7,9,11,13}", ok,
               bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (uint32_t n = 0; n <= (1u << 16) && ok; ++n)
      for (uint32_t m = 0; m <= n; ++m)
        if (dominates(m, n) != dominates(n - m, n)) {
          ok = false;
          bad = "(n,m) = (" + std::to_string(n) + "," + std::to_string(m) + ")";
          break;
        }
    report.add("dominance duality m vs n-m for n <= 2^16", ok, bad);
  }

  {
    // Deterministic sample: shifted products of q^i - 1 and small factorials.
    std::vector<ExactInt> sample;
    for (uint64_t q : {3, 5, 9, 13})
      for (uint32_t i = 1; i <= 10; ++i) sample.push_back(ExactInt(q).pow(i) - ExactInt(1));
    ExactInt fact(1);
    for (uint32_t t = 1; t <= 20; ++t) {
      fact *= ExactInt(t);
      sample.push_back(fact);
    }
    bool ok = true;
    std::string bad;
    for (size_t i = 0; i < sample.size() && ok; i += 3)
      for (size_t j = 0; j < sample.size() && ok; j += 2)
        if (v2(sample[i] * sample[j]) != v2(sample[i]) + v2(sample[j])) {
          ok = false;
          bad = sample[i].to_string() + " * " + sample[j].to_string();
        }
    report.add("v2 is additive on products (sampled grid)", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (uint64_t q : {3, 5, 9})
      for (uint32_t n = 0; n <= 16 && ok; ++n)
        for (uint32_t m = 0; m <= n && ok; ++m)
          if (gaussian_binomial(n, m, ExactInt(q)) != gaussian_binomial(n, n - m, ExactInt(q))) {
            ok = false;
            bad = "(n,m,q) = (" + std::to_string(n) + "," + std::to_string(m) + "," +
                  std::to_string(q) + ")";
          }
    report.add("gaussian binomial symmetry m <-> n-m", ok, bad);
  }

  return report;
}

// ---------------------------------------------------------------------------
// forms
// ---------------------------------------------------------------------------

Report verify_forms() {
  Report report;

  {
    bool ok = true;
    std::string bad;
    for (uint64_t q = 3; q <= 49 && ok; q += 2)
      for (uint32_t m1 = 2; m1 <= 32 && ok; m1 += 2)
        for (uint32_t m2 = 2; m2 <= 32 && ok; m2 += 2)
          for (Sign s1 : {Sign::plus, Sign::minus})
            for (Sign s2 : {Sign::plus, Sign::minus}) {
              const Disc lhs = discriminant_even(m1 + m2, q, s1 * s2);
              const Disc rhs =
                  discriminant_even(m1, q, s1) * discriminant_even(m2, q, s2);
              if (lhs != rhs) {
                ok = false;
                bad = "(m1,m2,q) = (" + std::to_string(m1) + "," + std::to_string(m2) + "," +
                      std::to_string(q) + ")";
              }
            }
    report.add("discriminant multiplicativity over direct sums (m <= 32, q <= 49)", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (uint64_t q = 3; q <= 49 && ok; q += 2)
      for (uint32_t m = 2; m <= 32 && ok; m += 2)
        for (Sign s : {Sign::plus, Sign::minus}) {
          const int sign_int = s == Sign::plus ? 1 : -1;
          const uint64_t e = (q - 1) / 2 * (m / 2);
          const int expected = sign_int * (e % 2 == 0 ? 1 : -1);
          const int got = discriminant_even(m, q, s) == Disc::square ? 1 : -1;
          if (expected != got) {
            ok = false;
            bad = "(m,q) = (" + std::to_string(m) + "," + std::to_string(q) + ")";
          }
        }
    report.add("discriminant character form D = v * (-1)^{(q-1)m/4}", ok, bad);
  }

  {
    bool ok = true;
    std::string bad;
    for (uint32_t n = 4; n <= 64 && ok; n += 2)
      for (Sign eps : {Sign::plus, Sign::minus}) {
        const Disc lhs = discriminant_even(n - 2, 3, eps);
        const Disc rhs = discriminant_even(n, 3, eps) * Disc::nonsquare;
        if (lhs != rhs) {
          ok = false;
          bad = "n = " + std::to_string(n);
        }
      }
    report.add("dimension drop at q=3 flips the discriminant (n <= 64)", ok, bad);
  }

  return report;
}

// ---------------------------------------------------------------------------
// dim4 displays and named index formulas
// ---------------------------------------------------------------------------

namespace {

void verify_dim4_family(Family family, const std::vector<uint64_t>& qs, Report& report) {
  const char* fam = family == Family::linear     ? "PSL_4"
                    : family == Family::unitary  ? "PSU_4"
                                                 : "PSp_4";
  for (Dim4Case c : dim4_cases_for(family)) {
    bool ok = true;
    std::string bad;
    for (uint64_t q : qs) {
      GroupSpec spec{family, 4, q, std::nullopt};
      if (!dim4_case_applicable(spec, c)) continue;
      const ExactInt value = dim4_two_part(spec, c);

      bool good = true;
      switch (c) {
        case Dim4Case::c5_subfield:
          good = family == Family::symplectic ? value == ExactInt(2) : value >= ExactInt(2);
          break;
        case Dim4Case::c6: {
          bool odd_class = false;
          if (family == Family::linear) odd_class = (q % 8 == 5);
          if (family == Family::unitary) odd_class = (q % 8 == 3);
          if (family == Family::symplectic) odd_class = (q % 8 == 3 || q % 8 == 5);
          good = odd_class ? value == ExactInt(1) : value > ExactInt(1);
          break;
        }
        case Dim4Case::c8_symplectic:
          good = value == two_part(ExactInt(q - 1)).exact_div(ExactInt(2)) &&
                 ((value == ExactInt(1)) == (q % 4 == 3));
          break;
        case Dim4Case::c5_symplectic:
          good = value == two_part(ExactInt(q + 1)).exact_div(ExactInt(2)) &&
                 ((value == ExactInt(1)) == (q % 4 == 1));
          break;
        default:
          good = value >= ExactInt(2);
          break;
      }
      if (!good) {
        ok = false;
        bad = "q = " + std::to_string(q) + ", value " + value.to_string();
        break;
      }
    }
    report.add(std::string(fam) + " " + to_string(c) + " two-part has its stated value/bound",
               ok, bad);
  }
}

}  // namespace

Report verify_dim4_displays(uint64_t qmax) {
  Report report;
  const auto qs = odd_prime_powers_up_to(qmax);
  verify_dim4_family(Family::linear, qs, report);
  verify_dim4_family(Family::unitary, qs, report);
  verify_dim4_family(Family::symplectic, qs, report);
  return report;
}

Report verify_named_indices(uint64_t qmax) {
  Report report;
  const auto qs = odd_prime_powers_up_to(qmax);
  {
    bool agree = true, iff = true;
    std::string bad;
    for (uint64_t q : qs) {
      if (!is_prime(q)) continue;
      GroupSpec omega7{Family::orthogonal_odd, 7, q, std::nullopt};
      const ExactInt by_orders = named_index_two_part(omega7, SmallGroupKind::omega7_2);
      const ExactInt by_display = named_index_two_part_display(omega7, SmallGroupKind::omega7_2);
      if (by_orders != by_display) {
        agree = false;
        bad = "q = " + std::to_string(q);
      }
      const bool odd_index = by_orders == ExactInt(1);
      if (odd_index != (q % 8 == 3 || q % 8 == 5)) {
        iff = false;
        bad = "q = " + std::to_string(q);
      }
    }
    report.add("Omega_7(2) index two-part: order quotient agrees with the display", agree, bad);
    report.add("Omega_7(2) index odd iff q == +-3 (mod 8)", iff, bad);
  }
  {
    bool agree = true, iff = true;
    std::string bad;
    for (uint64_t q : qs) {
      if (!is_prime(q)) continue;
      GroupSpec omega8{Family::orthogonal_even, 8, q, Sign::plus};
      const ExactInt by_orders = named_index_two_part(omega8, SmallGroupKind::omega8_plus_2);
      const ExactInt by_display =
          named_index_two_part_display(omega8, SmallGroupKind::omega8_plus_2);
      if (by_orders != by_display) {
        agree = false;
        bad = "q = " + std::to_string(q);
      }
      const bool odd_index = by_orders == ExactInt(1);
      if (odd_index != (q % 8 == 3 || q % 8 == 5)) {
        iff = false;
        bad = "q = " + std::to_string(q);
      }
    }
    report.add("Omega_8^+(2) index two-part: order quotient agrees with the display", agree, bad);
    report.add("Omega_8^+(2) index odd iff q == +-3 (mod 8)", iff, bad);
  }
  return report;
}

Report verify_dim4(uint64_t qmax) {
  Report report = verify_dim4_displays(qmax);
  const Report named = verify_named_indices(qmax);
  report.lines.insert(report.lines.end(), named.lines.begin(), named.lines.end());
  return report;
}

Report verify_oracle() {
  Report report;
  const OracleReport oracle = cross_validate();
  for (const OracleCheck& c : oracle.checks) report.add(c.name, c.pass, c.detail);
  return report;
}

Report verify_all(uint64_t qmax) {
  Report out;
  for (const Report& r : {verify_arith(), verify_forms(), verify_dim4(qmax), verify_oracle()})
    out.lines.insert(out.lines.end(), r.lines.begin(), r.lines.end());
  return out;
}

}  // namespace oia
