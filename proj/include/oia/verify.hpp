#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oia {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;
  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = {});
  size_t failures() const;
};

/// Odd prime powers in [3, qmax], ascending.
std::vector<uint64_t> odd_prime_powers_up_to(uint64_t qmax);

/// Dominance/parity laws: binomial and Gaussian-binomial parity against
/// binary dominance, dominance duality up to 2^16, valuation additivity,
/// Gaussian symmetry.
Report verify_arith();

/// Discriminant calculus: the closed form against the product rules,
/// its character form, and the dimension-drop identity at q = 3.
Report verify_forms();

/// Every displayed dimension-4 two-part expression over the odd prime powers
/// up to qmax, with the stated values and bounds.
Report verify_dim4_displays(uint64_t qmax = 199);

/// The Omega_7(2) and Omega_8^+(2) index two-parts computed two ways
/// (order quotient and closed form) over the primes up to qmax, with the
/// mod-8 parity criterion.
Report verify_named_indices(uint64_t qmax = 199);

/// Both of the above.
Report verify_dim4(uint64_t qmax = 199);

/// Exhaustive tiny-geometry cross-validation.
Report verify_oracle();

Report verify_all(uint64_t qmax = 199);

}  // namespace oia
