#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oia/forms.hpp"

namespace oia {

/// Small finite field with exhaustively verified operation tables.
/// Supports the odd primes up to 13 and the nine-element field built as
/// F_3[x]/(x^2+1), whose conjugation a+bx -> a-bx is the Frobenius x -> x^3.
class TinyField {
 public:
  static const TinyField& get(uint32_t q);

  uint32_t size() const { return q_; }
  uint32_t characteristic() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }
  uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
  uint32_t neg(uint32_t a) const { return neg_[a]; }
  uint32_t inv(uint32_t a) const;  // a != 0
  uint32_t conj(uint32_t a) const { return conj_[a]; }
  bool is_square(uint32_t a) const { return square_[a]; }  // nonzero squares

 private:
  explicit TinyField(uint32_t q);
  void verify_axioms() const;

  uint32_t q_ = 0;
  uint32_t p_ = 0;
  std::vector<uint32_t> add_, mul_, neg_, inv_, conj_;
  std::vector<bool> square_;
};

using Vec = std::vector<uint8_t>;  // coordinates in [0, q)
using Mat = std::vector<Vec>;      // rows

/// A formed vector space of dimension n <= 5 over a tiny field, given by an
/// explicit Gram matrix (absent for linear spaces). The constructor checks
/// the Gram shape for the kind and non-degeneracy.
class TinySpace {
 public:
  TinySpace(uint32_t field_size, uint32_t n, FormKind kind, Mat gram);

  static TinySpace linear(uint32_t q, uint32_t n);
  static TinySpace symplectic(uint32_t q, uint32_t n);
  static TinySpace orthogonal_even(uint32_t q, uint32_t n, Sign sign);
  static TinySpace orthogonal_odd(uint32_t q, uint32_t n, Disc disc);
  /// Hermitian space over F_{q0^2}; only q0 = 3 has a tiny field backing it.
  static TinySpace unitary(uint32_t q0, uint32_t n);

  const TinyField& field() const { return *field_; }
  uint32_t dim() const { return n_; }
  FormKind kind() const { return kind_; }
  const Mat& gram() const { return gram_; }
  uint64_t vector_count() const;
  Vec vector_at(uint64_t index) const;

  /// The form f(u, v); linear in u, conjugate-linear in v for unitary kind.
  uint32_t form(const Vec& u, const Vec& v) const;
  uint32_t quadratic(const Vec& v) const { return form(v, v); }

 private:
  const TinyField* field_;
  uint32_t n_;
  FormKind kind_;
  Mat gram_;
};

/// Visits every m-dimensional subspace exactly once, as the rows of its
/// reduced row-echelon basis, in lexicographic order.
void visit_subspaces(const TinySpace& space, uint32_t m,
                     const std::function<void(const Mat&)>& visit);
std::vector<Mat> enumerate_subspaces(const TinySpace& space, uint32_t m);
uint64_t count_subspaces(const TinySpace& space, uint32_t m);

Mat restricted_gram(const TinySpace& space, const Mat& basis);
bool gram_nondegenerate(const TinyField& field, const Mat& gram, FormKind kind);

/// Reduced row-echelon canonical basis of the row span (zero rows dropped).
Mat echelon_basis(const TinyField& field, Mat rows);

/// Basis of the perp of the span of `basis` (the form must be non-degenerate
/// on the whole space).
Mat perp_basis(const TinySpace& space, const Mat& basis);

struct InvariantFilter {
  std::optional<Disc> disc;
  std::optional<Sign> sign;
};

/// Number of m-subspaces whose restricted form is non-degenerate and matches
/// the filter. Filters require orthogonal kind.
uint64_t count_nondegenerate(const TinySpace& space, uint32_t m,
                             const InvariantFilter& filter = {});

/// Square class of det of the restricted Gram; the restriction must be
/// non-degenerate and the space orthogonal.
Disc oracle_disc(const TinySpace& space, const Mat& basis);

/// Sign of a non-degenerate even-dimensional restriction: plus iff the
/// restriction has maximal Witt index, decided by exhaustive search for a
/// totally singular subspace of half the dimension.
Sign oracle_sign(const TinySpace& space, const Mat& basis);

/// Number of ordered bases realizing the space's own Gram, i.e. the order of
/// its isometry group.
uint64_t count_isometry_frames(const TinySpace& space);

/// Direct matrix enumeration for tiny linear groups.
uint64_t count_gl2(uint32_t q);
uint64_t count_sl2(uint32_t p);

struct OracleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = {});
};

/// Exhaustive checks of one space against the formula side: subspace counts
/// against Gaussian binomials, non-degenerate class counts against isometry
/// order quotients, discriminants and signs against the closed form, and the
/// product rules on complementary pairs. `claimed_disc` / `claimed_sign` are
/// the invariants the space was built to have.
void cross_validate_space(const TinySpace& space, std::optional<Disc> claimed_disc,
                          std::optional<Sign> claimed_sign, OracleReport& report);

/// The full tiny grid: fields F_3 and F_5 in every kind up to dimension 4,
/// the unitary geometry over F_9, frame counts against isometry orders, and
/// the matrix-enumeration group orders.
OracleReport cross_validate();

/// Worker cap: min(hardware, ODD_INDEX_ATLAS_THREADS if set), at least 1.
unsigned oracle_worker_count();

}  // namespace oia
