#include "oia/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "oia/arith.hpp"
#include "oia/orders.hpp"

namespace oia {

// ---------------------------------------------------------------------------
// TinyField
// ---------------------------------------------------------------------------

TinyField::TinyField(uint32_t q) : q_(q) {
  const bool prime_field = is_prime(q) && q <= 13 && q % 2 == 1;
  if (!prime_field && q != 9)
    throw std::invalid_argument("TinyField: supported sizes are odd primes <= 13 and 9");
  p_ = prime_field ? q : 3;

  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  conj_.assign(q, 0);
  square_.assign(q, false);

  if (prime_field) {
    for (uint32_t a = 0; a < q; ++a) {
      for (uint32_t b = 0; b < q; ++b) {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
      neg_[a] = (q - a) % q;
      conj_[a] = a;
    }
  } else {
    // F_9 = F_3[x]/(x^2+1), element a + 3b meaning a + b*x.
    auto enc = [](uint32_t a, uint32_t b) { return a + 3 * b; };
    for (uint32_t a0 = 0; a0 < 3; ++a0)
      for (uint32_t b0 = 0; b0 < 3; ++b0)
        for (uint32_t a1 = 0; a1 < 3; ++a1)
          for (uint32_t b1 = 0; b1 < 3; ++b1) {
            const uint32_t u = enc(a0, b0), v = enc(a1, b1);
            add_[u * q + v] = enc((a0 + a1) % 3, (b0 + b1) % 3);
            // (a0 + b0 x)(a1 + b1 x) with x^2 = -1
            const uint32_t re = (a0 * a1 + 2 * b0 * b1) % 3;  // -1 == 2 mod 3
            const uint32_t im = (a0 * b1 + b0 * a1) % 3;
            mul_[u * q + v] = enc(re, im);
          }
    for (uint32_t a0 = 0; a0 < 3; ++a0)
      for (uint32_t b0 = 0; b0 < 3; ++b0) {
        neg_[enc(a0, b0)] = enc((3 - a0) % 3, (3 - b0) % 3);
        conj_[enc(a0, b0)] = enc(a0, (3 - b0) % 3);
      }
  }

  for (uint32_t a = 1; a < q; ++a) {
    for (uint32_t b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) inv_[a] = b;
    }
    square_[mul_[a * q + a]] = true;
  }
  verify_axioms();
}

void TinyField::verify_axioms() const {
  const uint32_t q = q_;
  for (uint32_t a = 0; a < q; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0)
      throw std::logic_error("TinyField: identity axiom failed");
    if (add(a, neg(a)) != 0) throw std::logic_error("TinyField: negation failed");
    if (a != 0 && mul(a, inv(a)) != 1) throw std::logic_error("TinyField: inverse failed");
    if (conj(conj(a)) != a) throw std::logic_error("TinyField: conjugation not an involution");
    // Conjugation must be the Frobenius x -> x^p.
    uint32_t frob = 1;
    for (uint32_t i = 0; i < p_; ++i) frob = mul(frob, a);
    if (conj(a) != (q_ == 9 ? frob : a))
      throw std::logic_error("TinyField: conjugation is not the Frobenius");
  }
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
        throw std::logic_error("TinyField: commutativity failed");
      if (conj(mul(a, b)) != mul(conj(a), conj(b)))
        throw std::logic_error("TinyField: conjugation not multiplicative");
      for (uint32_t c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
          throw std::logic_error("TinyField: associativity of + failed");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::logic_error("TinyField: associativity of * failed");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          throw std::logic_error("TinyField: distributivity failed");
      }
    }
}

uint32_t TinyField::inv(uint32_t a) const {
  if (a == 0) throw std::invalid_argument("TinyField: inverse of zero");
  return inv_[a];
}

const TinyField& TinyField::get(uint32_t q) {
  static std::map<uint32_t, TinyField> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, TinyField(q)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// TinySpace
// ---------------------------------------------------------------------------

namespace {

uint32_t matrix_rank(const TinyField& F, Mat m) {
  const uint32_t rows = m.size();
  if (rows == 0) return 0;
  const uint32_t cols = m[0].size();
  uint32_t rank = 0;
  for (uint32_t col = 0; col < cols && rank < rows; ++col) {
    uint32_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const uint32_t scale = F.inv(m[rank][col]);
    for (uint32_t j = 0; j < cols; ++j) m[rank][j] = F.mul(m[rank][j], scale);
    for (uint32_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const uint32_t factor = m[r][col];
      for (uint32_t j = 0; j < cols; ++j)
        m[r][j] = F.sub(m[r][j], F.mul(factor, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

uint32_t least_nonsquare(const TinyField& F) {
  for (uint32_t a = 2; a < F.size(); ++a)
    if (!F.is_square(a)) return a;
  throw std::logic_error("TinyField: no nonsquare found");
}

}  // namespace

TinySpace::TinySpace(uint32_t field_size, uint32_t n, FormKind kind, Mat gram)
    : field_(&TinyField::get(field_size)), n_(n), kind_(kind), gram_(std::move(gram)) {
  if (n_ == 0 || n_ > 5) throw std::invalid_argument("TinySpace: dimension must be 1..5");
  if (kind_ == FormKind::linear) {
    if (!gram_.empty()) throw std::invalid_argument("TinySpace: linear spaces have no Gram");
    return;
  }
  if (gram_.size() != n_) throw std::invalid_argument("TinySpace: Gram size mismatch");
  for (const Vec& row : gram_)
    if (row.size() != n_) throw std::invalid_argument("TinySpace: Gram size mismatch");
  const TinyField& F = *field_;
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t j = 0; j < n_; ++j) {
      const uint32_t a = gram_[i][j], b = gram_[j][i];
      switch (kind_) {
        case FormKind::symplectic:
          if (b != F.neg(a) || (i == j && a != 0))
            throw std::invalid_argument("TinySpace: symplectic Gram must be alternating");
          break;
        case FormKind::orthogonal:
          if (b != a) throw std::invalid_argument("TinySpace: orthogonal Gram must be symmetric");
          break;
        case FormKind::unitary:
          if (b != F.conj(a))
            throw std::invalid_argument("TinySpace: unitary Gram must be Hermitian");
          break;
        default: break;
      }
    }
  if (matrix_rank(F, gram_) != n_)
    throw std::invalid_argument("TinySpace: Gram is degenerate");
}

TinySpace TinySpace::linear(uint32_t q, uint32_t n) { return TinySpace(q, n, FormKind::linear, {}); }

TinySpace TinySpace::symplectic(uint32_t q, uint32_t n) {
  if (n % 2 != 0) throw std::invalid_argument("TinySpace: symplectic dimension must be even");
  const TinyField& F = TinyField::get(q);
  Mat g(n, Vec(n, 0));
  for (uint32_t i = 0; i < n; i += 2) {
    g[i][i + 1] = 1;
    g[i + 1][i] = static_cast<uint8_t>(F.neg(1));
  }
  return TinySpace(q, n, FormKind::symplectic, std::move(g));
}

TinySpace TinySpace::orthogonal_even(uint32_t q, uint32_t n, Sign sign) {
  if (n % 2 != 0) throw std::invalid_argument("TinySpace: even dimension expected");
  const TinyField& F = TinyField::get(q);
  Mat g(n, Vec(n, 0));
  const uint32_t hyperbolic_pairs = (sign == Sign::plus) ? n / 2 : n / 2 - 1;
  for (uint32_t i = 0; i < 2 * hyperbolic_pairs; i += 2) {
    g[i][i + 1] = 1;
    g[i + 1][i] = 1;
  }
  if (sign == Sign::minus) {
    // Anisotropic plane x^2 - delta y^2 with delta a nonsquare.
    const uint32_t i = n - 2;
    g[i][i] = 1;
    g[i + 1][i + 1] = static_cast<uint8_t>(F.neg(least_nonsquare(F)));
  }
  return TinySpace(q, n, FormKind::orthogonal, std::move(g));
}

TinySpace TinySpace::orthogonal_odd(uint32_t q, uint32_t n, Disc disc) {
  if (n % 2 == 0) throw std::invalid_argument("TinySpace: odd dimension expected");
  const TinyField& F = TinyField::get(q);
  Mat g(n, Vec(n, 0));
  for (uint32_t i = 0; i < n; ++i) g[i][i] = 1;
  if (disc == Disc::nonsquare) g[n - 1][n - 1] = static_cast<uint8_t>(least_nonsquare(F));
  return TinySpace(q, n, FormKind::orthogonal, std::move(g));
}

TinySpace TinySpace::unitary(uint32_t q0, uint32_t n) {
  if (q0 != 3) throw std::invalid_argument("TinySpace: unitary spaces are backed by F_9 only");
  Mat g(n, Vec(n, 0));
  for (uint32_t i = 0; i < n; ++i) g[i][i] = 1;
  return TinySpace(q0 * q0, n, FormKind::unitary, std::move(g));
}

uint64_t TinySpace::vector_count() const {
  uint64_t total = 1;
  for (uint32_t i = 0; i < n_; ++i) total *= field_->size();
  return total;
}

Vec TinySpace::vector_at(uint64_t index) const {
  Vec v(n_, 0);
  for (uint32_t i = 0; i < n_; ++i) {
    v[i] = static_cast<uint8_t>(index % field_->size());
    index /= field_->size();
  }
  return v;
}

uint32_t TinySpace::form(const Vec& u, const Vec& v) const {
  if (kind_ == FormKind::linear)
    throw std::invalid_argument("TinySpace: linear spaces have no form");
  const TinyField& F = *field_;
  uint32_t acc = 0;
  for (uint32_t i = 0; i < n_; ++i) {
    if (u[i] == 0) continue;
    uint32_t row = 0;
    for (uint32_t j = 0; j < n_; ++j) {
      if (v[j] == 0) continue;
      const uint32_t vj = kind_ == FormKind::unitary ? F.conj(v[j]) : v[j];
      row = F.add(row, F.mul(gram_[i][j], vj));
    }
    acc = F.add(acc, F.mul(u[i], row));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Subspace enumeration (reduced row echelon form)
// ---------------------------------------------------------------------------

void visit_subspaces(const TinySpace& space, uint32_t m,
                     const std::function<void(const Mat&)>& visit) {
  const uint32_t n = space.dim();
  const uint32_t q = space.field().size();
  if (m > n) throw std::invalid_argument("visit_subspaces: m > n");
  if (m == 0) {
    visit(Mat{});
    return;
  }

  std::vector<uint32_t> pivots(m);
  for (uint32_t i = 0; i < m; ++i) pivots[i] = i;

  auto process_pivot_set = [&]() {
    std::vector<bool> is_pivot(n, false);
    for (uint32_t p : pivots) is_pivot[p] = true;
    // Free cells: (row i, col j) with j > pivots[i], j not a pivot column.
    std::vector<std::pair<uint32_t, uint32_t>> cells;
    for (uint32_t i = 0; i < m; ++i)
      for (uint32_t j = pivots[i] + 1; j < n; ++j)
        if (!is_pivot[j]) cells.emplace_back(i, j);

    Mat basis(m, Vec(n, 0));
    for (uint32_t i = 0; i < m; ++i) basis[i][pivots[i]] = 1;

    std::vector<uint8_t> odo(cells.size(), 0);
    while (true) {
      visit(basis);
      size_t k = 0;
      while (k < cells.size()) {
        auto [i, j] = cells[k];
        if (++odo[k] < q) {
          basis[i][j] = odo[k];
          break;
        }
        odo[k] = 0;
        basis[i][j] = 0;
        ++k;
      }
      if (k == cells.size()) break;
    }
  };

  // Iterate pivot column combinations in lexicographic order.
  while (true) {
    process_pivot_set();
    int32_t i = static_cast<int32_t>(m) - 1;
    while (i >= 0 && pivots[i] == n - m + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (uint32_t k = i + 1; k < m; ++k) pivots[k] = pivots[k - 1] + 1;
  }
}

std::vector<Mat> enumerate_subspaces(const TinySpace& space, uint32_t m) {
  std::vector<Mat> out;
  visit_subspaces(space, m, [&](const Mat& basis) { out.push_back(basis); });
  return out;
}

uint64_t count_subspaces(const TinySpace& space, uint32_t m) {
  uint64_t count = 0;
  visit_subspaces(space, m, [&](const Mat&) { ++count; });
  return count;
}

// ---------------------------------------------------------------------------
// Restrictions, perps, invariants
// ---------------------------------------------------------------------------

Mat echelon_basis(const TinyField& field, Mat rows) {
  if (rows.empty()) return rows;
  const uint32_t n = rows[0].size();
  uint32_t rank = 0;
  for (uint32_t col = 0; col < n && rank < rows.size(); ++col) {
    uint32_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const uint32_t scale = field.inv(rows[rank][col]);
    for (uint32_t j = 0; j < n; ++j)
      rows[rank][j] = static_cast<uint8_t>(field.mul(rows[rank][j], scale));
    for (uint32_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const uint32_t factor = rows[r][col];
      for (uint32_t j = 0; j < n; ++j)
        rows[r][j] = static_cast<uint8_t>(field.sub(rows[r][j], field.mul(factor, rows[rank][j])));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

Mat restricted_gram(const TinySpace& space, const Mat& basis) {
  const uint32_t m = basis.size();
  Mat g(m, Vec(m, 0));
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j)
      g[i][j] = static_cast<uint8_t>(space.form(basis[i], basis[j]));
  return g;
}

bool gram_nondegenerate(const TinyField& field, const Mat& gram, FormKind) {
  if (gram.empty()) return true;
  return matrix_rank(field, gram) == gram.size();
}

Mat perp_basis(const TinySpace& space, const Mat& basis) {
  const TinyField& F = space.field();
  const uint32_t n = space.dim();
  const uint32_t k = basis.size();
  // v in the perp iff form(v, u) = 0 for each basis vector u; form(v, u) is
  // linear in v, with coefficient form(e_j, u) on v_j.
  Mat constraints(k, Vec(n, 0));
  for (uint32_t r = 0; r < k; ++r) {
    Vec e(n, 0);
    for (uint32_t j = 0; j < n; ++j) {
      e.assign(n, 0);
      e[j] = 1;
      constraints[r][j] = static_cast<uint8_t>(space.form(e, basis[r]));
    }
  }
  // Nullspace by elimination.
  Mat m = constraints;
  std::vector<int32_t> pivot_of_col(n, -1);
  uint32_t rank = 0;
  for (uint32_t col = 0; col < n && rank < k; ++col) {
    uint32_t pivot = rank;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) continue;
    std::swap(m[rank], m[pivot]);
    const uint32_t scale = F.inv(m[rank][col]);
    for (uint32_t j = 0; j < n; ++j) m[rank][j] = static_cast<uint8_t>(F.mul(m[rank][j], scale));
    for (uint32_t r = 0; r < k; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const uint32_t factor = m[r][col];
      for (uint32_t j = 0; j < n; ++j)
        m[r][j] = static_cast<uint8_t>(F.sub(m[r][j], F.mul(factor, m[rank][j])));
    }
    pivot_of_col[col] = static_cast<int32_t>(rank);
    ++rank;
  }
  Mat out;
  for (uint32_t free_col = 0; free_col < n; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    Vec v(n, 0);
    v[free_col] = 1;
    for (uint32_t col = 0; col < n; ++col) {
      const int32_t pr = pivot_of_col[col];
      if (pr >= 0) v[col] = static_cast<uint8_t>(F.neg(m[pr][free_col]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

Disc oracle_disc(const TinySpace& space, const Mat& basis) {
  if (space.kind() != FormKind::orthogonal)
    throw std::invalid_argument("oracle_disc: orthogonal spaces only");
  const TinyField& F = space.field();
  Mat g = restricted_gram(space, basis);
  const uint32_t m = g.size();
  // Determinant by elimination.
  uint32_t det = 1;
  for (uint32_t col = 0; col < m; ++col) {
    uint32_t pivot = col;
    while (pivot < m && g[pivot][col] == 0) ++pivot;
    if (pivot == m) throw std::invalid_argument("oracle_disc: degenerate restriction");
    if (pivot != col) {
      std::swap(g[pivot], g[col]);
      det = F.neg(det);
    }
    det = F.mul(det, g[col][col]);
    const uint32_t scale = F.inv(g[col][col]);
    for (uint32_t r = col + 1; r < m; ++r) {
      if (g[r][col] == 0) continue;
      const uint32_t factor = F.mul(g[r][col], scale);
      for (uint32_t j = col; j < m; ++j)
        g[r][j] = static_cast<uint8_t>(F.sub(g[r][j], F.mul(factor, g[col][j])));
    }
  }
  if (det == 0) throw std::invalid_argument("oracle_disc: degenerate restriction");
  return F.is_square(det) ? Disc::square : Disc::nonsquare;
}

namespace {

// Does the orthogonal space with this Gram contain a nonzero singular vector?
bool has_singular_vector(const TinyField& F, const Mat& gram) {
  const uint32_t m = gram.size();
  uint64_t total = 1;
  for (uint32_t i = 0; i < m; ++i) total *= F.size();
  for (uint64_t idx = 1; idx < total; ++idx) {
    Vec v(m, 0);
    uint64_t rest = idx;
    for (uint32_t i = 0; i < m; ++i) {
      v[i] = static_cast<uint8_t>(rest % F.size());
      rest /= F.size();
    }
    uint32_t val = 0;
    for (uint32_t i = 0; i < m; ++i) {
      if (v[i] == 0) continue;
      for (uint32_t j = 0; j < m; ++j) {
        if (v[j] == 0) continue;
        val = F.add(val, F.mul(v[i], F.mul(gram[i][j], v[j])));
      }
    }
    if (val == 0) return true;
  }
  return false;
}

}  // namespace

Sign oracle_sign(const TinySpace& space, const Mat& basis) {
  if (space.kind() != FormKind::orthogonal)
    throw std::invalid_argument("oracle_sign: orthogonal spaces only");
  const uint32_t m = basis.size();
  if (m % 2 != 0 || m == 0)
    throw std::invalid_argument("oracle_sign: defined for even dimension");
  const TinyField& F = space.field();
  const Mat g = restricted_gram(space, basis);
  if (!gram_nondegenerate(F, g, FormKind::orthogonal))
    throw std::invalid_argument("oracle_sign: degenerate restriction");

  if (m == 2) return has_singular_vector(F, g) ? Sign::plus : Sign::minus;
  if (m == 4) {
    // Witt index 2 iff some 2-subspace is totally singular.
    TinySpace restricted(F.size(), 4, FormKind::orthogonal, g);
    bool found = false;
    visit_subspaces(restricted, 2, [&](const Mat& b) {
      if (found) return;
      if (restricted.quadratic(b[0]) == 0 && restricted.quadratic(b[1]) == 0 &&
          restricted.form(b[0], b[1]) == 0)
        found = true;
    });
    return found ? Sign::plus : Sign::minus;
  }
  throw std::invalid_argument("oracle_sign: dimensions 2 and 4 only");
}

uint64_t count_nondegenerate(const TinySpace& space, uint32_t m, const InvariantFilter& filter) {
  if ((filter.disc || filter.sign) && space.kind() != FormKind::orthogonal)
    throw std::invalid_argument("count_nondegenerate: invariant filters need orthogonal kind");
  if (filter.sign && m % 2 != 0)
    throw std::invalid_argument("count_nondegenerate: sign filter needs even dimension");
  const TinyField& F = space.field();
  uint64_t count = 0;
  visit_subspaces(space, m, [&](const Mat& basis) {
    const Mat g = restricted_gram(space, basis);
    if (!gram_nondegenerate(F, g, space.kind())) return;
    if (filter.disc && oracle_disc(space, basis) != *filter.disc) return;
    if (filter.sign && oracle_sign(space, basis) != *filter.sign) return;
    ++count;
  });
  return count;
}

// ---------------------------------------------------------------------------
// Frame counting and matrix enumeration
// ---------------------------------------------------------------------------

unsigned oracle_worker_count() {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("ODD_INDEX_ATLAS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < workers) workers = static_cast<unsigned>(cap);
  }
  return std::min(workers, 8u);
}

namespace {

uint64_t count_frames_from(const TinySpace& space, const std::vector<Vec>& vectors,
                           std::vector<const Vec*>& chosen) {
  const uint32_t i = chosen.size();
  const Mat& gram = space.gram();
  if (i == space.dim()) return 1;
  uint64_t total = 0;
  for (const Vec& v : vectors) {
    if (space.form(v, v) != gram[i][i]) continue;
    bool ok = true;
    for (uint32_t j = 0; j < i && ok; ++j)
      ok = space.form(v, *chosen[j]) == gram[i][j];
    if (!ok) continue;
    chosen.push_back(&v);
    total += count_frames_from(space, vectors, chosen);
    chosen.pop_back();
  }
  return total;
}

}  // namespace

uint64_t count_isometry_frames(const TinySpace& space) {
  if (space.kind() == FormKind::linear)
    throw std::invalid_argument("count_isometry_frames: formed spaces only");
  const uint64_t total = space.vector_count();
  std::vector<Vec> vectors;
  vectors.reserve(total);
  for (uint64_t idx = 0; idx < total; ++idx) vectors.push_back(space.vector_at(idx));

  const unsigned workers = std::min<uint64_t>(oracle_worker_count(), total);
  if (workers <= 1) {
    std::vector<const Vec*> chosen;
    return count_frames_from(space, vectors, chosen);
  }

  // Split the first basis vector across workers; counts merge by addition,
  // so the result does not depend on the partition.
  std::vector<uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  const Mat& gram = space.gram();
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      uint64_t local = 0;
      std::vector<const Vec*> chosen;
      for (uint64_t idx = w; idx < total; idx += workers) {
        const Vec& v = vectors[idx];
        if (space.form(v, v) != gram[0][0]) continue;
        chosen.assign(1, &v);
        local += count_frames_from(space, vectors, chosen);
      }
      partial[w] = local;
    });
  }
  for (auto& t : threads) t.join();
  uint64_t sum = 0;
  for (uint64_t p : partial) sum += p;
  return sum;
}

uint64_t count_gl2(uint32_t q) {
  const TinyField& F = TinyField::get(q);
  uint64_t count = 0;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b)
      for (uint32_t c = 0; c < q; ++c)
        for (uint32_t d = 0; d < q; ++d)
          if (F.sub(F.mul(a, d), F.mul(b, c)) != 0) ++count;
  return count;
}

uint64_t count_sl2(uint32_t p) {
  const TinyField& F = TinyField::get(p);
  uint64_t count = 0;
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b)
      for (uint32_t c = 0; c < p; ++c)
        for (uint32_t d = 0; d < p; ++d)
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 1) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Cross-validation
// ---------------------------------------------------------------------------

bool OracleReport::all_pass() const {
  for (const OracleCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

void OracleReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

namespace {

std::string space_tag(const TinySpace& space) {
  return std::string(to_string(space.kind())) + " |F|=" +
         std::to_string(space.field().size()) + " n=" + std::to_string(space.dim());
}

// Formula-side count of non-degenerate m-subspaces in one invariant class.
ExactInt expected_class_count(const TinySpace& space, uint32_t m, std::optional<Disc> disc_V,
                              std::optional<Sign> sign_V, std::optional<Sign> sign_U,
                              std::optional<Disc> disc_U) {
  const uint32_t n = space.dim();
  const uint64_t q =
      space.kind() == FormKind::unitary ? 3 : space.field().size();
  switch (space.kind()) {
    case FormKind::symplectic: {
      const ExactInt whole = order_isometry(Family::symplectic, n, q, std::nullopt);
      return whole.exact_div(order_isometry(Family::symplectic, m, q, std::nullopt) *
                             order_isometry(Family::symplectic, n - m, q, std::nullopt));
    }
    case FormKind::unitary: {
      const ExactInt whole = order_isometry(Family::unitary, n, q, std::nullopt);
      return whole.exact_div(order_isometry(Family::unitary, m, q, std::nullopt) *
                             order_isometry(Family::unitary, n - m, q, std::nullopt));
    }
    case FormKind::orthogonal: {
      const ExactInt whole = order_isometry(FormKind::orthogonal, n, q, sign_V);
      ExactInt part(0), comp(0);
      if (m % 2 == 0) {
        part = order_isometry(FormKind::orthogonal, m, q, sign_U);
        if ((n - m) % 2 == 0) {
          // Both sides even: complement sign from the product rule.
          comp = order_isometry(FormKind::orthogonal, n - m, q, *sign_V * *sign_U);
        } else {
          comp = order_isometry(FormKind::orthogonal, n - m, q, std::nullopt);
        }
      } else if ((n - m) % 2 == 0) {
        // Odd subspace of an odd space: complement disc from the product
        // rule picks the complement sign through the closed form.
        const Disc comp_disc = *disc_V * *disc_U;
        const Sign comp_sign = discriminant_even(n - m, q, Sign::plus) == comp_disc
                                   ? Sign::plus
                                   : Sign::minus;
        part = order_isometry(FormKind::orthogonal, m, q, std::nullopt);
        comp = order_isometry(FormKind::orthogonal, n - m, q, comp_sign);
      } else {
        part = order_isometry(FormKind::orthogonal, m, q, std::nullopt);
        comp = order_isometry(FormKind::orthogonal, n - m, q, std::nullopt);
      }
      return whole.exact_div(part * comp);
    }
    default:
      throw std::invalid_argument("expected_class_count: formed kinds only");
  }
}

}  // namespace

void cross_validate_space(const TinySpace& space, std::optional<Disc> claimed_disc,
                          std::optional<Sign> claimed_sign, OracleReport& report) {
  const std::string tag = space_tag(space);
  const uint32_t n = space.dim();
  const uint64_t qf = space.field().size();

  // Subspace counts against Gaussian binomials, every dimension.
  for (uint32_t m = 0; m <= n; ++m) {
    const uint64_t oracle = count_subspaces(space, m);
    const ExactInt formula = gaussian_binomial(n, m, ExactInt(qf));
    report.add(tag + " subspace-count m=" + std::to_string(m),
               ExactInt(oracle) == formula,
               "oracle " + std::to_string(oracle) + " vs gauss " + formula.to_string());
  }
  if (space.kind() == FormKind::linear) return;

  std::optional<Disc> disc_V;
  std::optional<Sign> sign_V;
  if (space.kind() == FormKind::orthogonal) {
    Mat full(n, Vec(n, 0));
    for (uint32_t i = 0; i < n; ++i) full[i][i] = 1;  // standard basis rows
    disc_V = oracle_disc(space, full);
    if (claimed_disc)
      report.add(tag + " ambient-disc", *disc_V == *claimed_disc,
                 std::string("oracle ") + to_string(*disc_V));
    if (n % 2 == 0) {
      sign_V = oracle_sign(space, full);
      if (claimed_sign)
        report.add(tag + " ambient-sign", *sign_V == *claimed_sign,
                   std::string("oracle ") + to_string(*sign_V));
      report.add(tag + " ambient Eq2",
                 discriminant_even(n, qf, *sign_V) == *disc_V,
                 "disc/sign closed form on the ambient space");
    }
  }

  // Non-degenerate class counts and the per-subspace identities.
  for (uint32_t m = 1; m < n; ++m) {
    if (space.kind() == FormKind::symplectic && m % 2 != 0) {
      const uint64_t count = count_nondegenerate(space, m);
      report.add(tag + " no-odd-nondeg m=" + std::to_string(m), count == 0,
                 std::to_string(count) + " found");
      continue;
    }
    if (space.kind() != FormKind::orthogonal) {
      const uint64_t oracle = count_nondegenerate(space, m);
      const ExactInt expected =
          expected_class_count(space, m, std::nullopt, std::nullopt, std::nullopt, std::nullopt);
      report.add(tag + " nondeg-count m=" + std::to_string(m),
                 ExactInt(oracle) == expected,
                 "oracle " + std::to_string(oracle) + " vs quotient " + expected.to_string());
      continue;
    }

    // Orthogonal: count per invariant class.
    if (m % 2 == 0) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        const uint64_t oracle = count_nondegenerate(space, m, {std::nullopt, s});
        const ExactInt expected = expected_class_count(space, m, disc_V, sign_V, s, std::nullopt);
        report.add(tag + " nondeg-count m=" + std::to_string(m) + " sgn=" + to_string(s),
                   ExactInt(oracle) == expected,
                   "oracle " + std::to_string(oracle) + " vs quotient " + expected.to_string());
      }
    } else {
      for (Disc d : {Disc::square, Disc::nonsquare}) {
        const uint64_t oracle = count_nondegenerate(space, m, {d, std::nullopt});
        const ExactInt expected = expected_class_count(space, m, disc_V, sign_V, std::nullopt, d);
        report.add(tag + " nondeg-count m=" + std::to_string(m) + " D=" + to_string(d),
                   ExactInt(oracle) == expected,
                   "oracle " + std::to_string(oracle) + " vs quotient " + expected.to_string());
      }
    }

    // Eq. 2 on every non-degenerate even subspace; Eq. 3 / Eq. 4 on every
    // complementary pair.
    bool eq2_ok = true, eq3_ok = true, eq4_ok = true;
    std::string first_bad;
    visit_subspaces(space, m, [&](const Mat& basis) {
      const Mat g = restricted_gram(space, basis);
      if (!gram_nondegenerate(space.field(), g, space.kind())) return;
      const Disc dU = oracle_disc(space, basis);
      const Mat perp = perp_basis(space, basis);
      const Disc dW = oracle_disc(space, perp);
      if (disc_V && dU * dW != *disc_V) {
        eq3_ok = false;
        if (first_bad.empty()) first_bad = tag + " m=" + std::to_string(m);
      }
      if (m % 2 == 0) {
        const Sign sU = oracle_sign(space, basis);
        if (discriminant_even(m, qf, sU) != dU) {
          eq2_ok = false;
          if (first_bad.empty()) first_bad = tag + " m=" + std::to_string(m);
        }
        if (n % 2 == 0 && sign_V) {
          const Sign sW = oracle_sign(space, perp);
          if (sU * sW != *sign_V) {
            eq4_ok = false;
            if (first_bad.empty()) first_bad = tag + " m=" + std::to_string(m);
          }
        }
      }
    });
    if (m % 2 == 0)
      report.add(tag + " Eq2 m=" + std::to_string(m), eq2_ok, first_bad);
    report.add(tag + " Eq3 m=" + std::to_string(m), eq3_ok, first_bad);
    if (m % 2 == 0 && n % 2 == 0)
      report.add(tag + " Eq4 m=" + std::to_string(m), eq4_ok, first_bad);
  }

  // Unitary ancillary: isotropic projective points at n = 3.
  if (space.kind() == FormKind::unitary && n == 3) {
    uint64_t isotropic = 0;
    visit_subspaces(space, 1, [&](const Mat& basis) {
      if (space.quadratic(basis[0]) == 0) ++isotropic;
    });
    report.add(tag + " isotropic-points", isotropic == 28,
               "oracle " + std::to_string(isotropic) + " vs q^3+1 = 28");
  }
}

OracleReport cross_validate() {
  OracleReport report;
  for (uint32_t q : {3u, 5u}) {
    for (uint32_t n = 1; n <= 4; ++n)
      cross_validate_space(TinySpace::linear(q, n), std::nullopt, std::nullopt, report);
    for (uint32_t n : {2u, 4u})
      cross_validate_space(TinySpace::symplectic(q, n), std::nullopt, std::nullopt, report);
    for (uint32_t n : {1u, 3u})
      for (Disc d : {Disc::square, Disc::nonsquare})
        cross_validate_space(TinySpace::orthogonal_odd(q, n, d), d, std::nullopt, report);
    for (uint32_t n : {2u, 4u})
      for (Sign s : {Sign::plus, Sign::minus})
        cross_validate_space(TinySpace::orthogonal_even(q, n, s),
                             discriminant_even(n, q, s), s, report);
  }
  for (uint32_t n = 1; n <= 3; ++n)
    cross_validate_space(TinySpace::unitary(3, n), std::nullopt, std::nullopt, report);

  // Isometry frame counts against the order formulas.
  auto check_frames = [&](const TinySpace& space, Family family, uint64_t q,
                          std::optional<Sign> sign) {
    const uint64_t frames = count_isometry_frames(space);
    const ExactInt expected = order_isometry(family, space.dim(), q, sign);
    report.add("frames " + space_tag(space) +
                   (sign ? std::string(" sgn=") + to_string(*sign) : std::string()),
               ExactInt(frames) == expected,
               "oracle " + std::to_string(frames) + " vs formula " + expected.to_string());
  };
  for (uint32_t q : {3u, 5u}) {
    check_frames(TinySpace::symplectic(q, 2), Family::symplectic, q, std::nullopt);
    for (Sign s : {Sign::plus, Sign::minus})
      check_frames(TinySpace::orthogonal_even(q, 2, s), Family::orthogonal_even, q, s);
    for (Disc d : {Disc::square, Disc::nonsquare})
      check_frames(TinySpace::orthogonal_odd(q, 3, d), Family::orthogonal_odd, q, std::nullopt);
    for (Sign s : {Sign::plus, Sign::minus})
      check_frames(TinySpace::orthogonal_even(q, 4, s), Family::orthogonal_even, q, s);
  }
  check_frames(TinySpace::symplectic(3, 4), Family::symplectic, 3, std::nullopt);
  for (uint32_t n = 1; n <= 3; ++n)
    check_frames(TinySpace::unitary(3, n), Family::unitary, 3, std::nullopt);

  // Matrix-enumeration group orders feeding the order-formula hazards.
  report.add("order GL_2(3)", ExactInt(count_gl2(3)) == order_isometry(Family::linear, 2, 3, {}),
             std::to_string(count_gl2(3)));
  {
    const uint64_t sl27 = count_sl2(7);
    const ExactInt psl27 = order_simple({Family::linear, 2, 7, {}});
    report.add("order PSL_2(7)", ExactInt(sl27 / 2) == psl27,
               "matrices " + std::to_string(sl27) + " / 2 vs " + psl27.to_string());
    const uint64_t sl213 = count_sl2(13);
    const ExactInt psl213 = order_simple({Family::linear, 2, 13, {}});
    report.add("order PSL_2(13)", ExactInt(sl213 / 2) == psl213,
               "matrices " + std::to_string(sl213) + " / 2 vs " + psl213.to_string());
  }
  {
    const uint64_t sp43 = count_isometry_frames(TinySpace::symplectic(3, 4));
    const ExactInt psp43 = order_simple({Family::symplectic, 4, 3, {}});
    report.add("order PSp_4(3)", ExactInt(sp43 / 2) == psp43,
               "frames " + std::to_string(sp43) + " / 2 vs " + psp43.to_string());
  }
  return report;
}

}  // namespace oia
