#pragma once

#include <optional>

#include "nilflat/matrix.hpp"

namespace nilflat {

/// Incremental exact row reduction. Rows are stored as content-normalized
/// integer vectors (denominators cleared, gcd divided out), and the set is
/// kept fully reduced: every pivot column is zero in all other rows. The
/// rational RREF with leading ones is produced only on extraction, so no
/// rational arithmetic happens during elimination.
class RowReducer {
public:
  explicit RowReducer(int cols) : cols_(cols) {}

  /// Reduces the row against the current set and inserts it if independent.
  /// Returns true when the rank grew.
  bool insert(const Vec& row);
  bool insert_int(std::vector<mpz_class> row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Canonical reduced row-echelon rows (leading coefficient 1, sorted by
  /// pivot column). Unique for the row space.
  std::vector<Vec> rref_rows() const;

private:
  struct IntRow {
    std::vector<mpz_class> a;
    int pivot = -1;
  };
  static void normalize_content(IntRow& r);
  void reduce_against(IntRow& r) const;

  int cols_;
  std::vector<IntRow> rows_;   // sorted by pivot column
  std::vector<int> pivots_;    // sorted
};

/// A linear subspace of Q^n in canonical form: the basis matrix rows are the
/// unique RREF basis, so two equal subspaces compare equal as data.
class Subspace {
public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  Subspace(int ambient_dim, const std::vector<Vec>& spanning);

  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }
  bool is_zero() const { return dim() == 0; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Invertible n x n matrix whose first dim() columns are the basis of this
  /// subspace, completed by standard basis vectors on the free columns.
  Matrix adapted_basis() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  int ambient_;
  Matrix basis_;
};

struct SolveResult {
  Vec particular;
  Subspace kernel;
};

/// Exact solution of A x = b. Returns the particular solution with all free
/// coordinates zero plus the canonical kernel basis, or nullopt when
/// inconsistent.
std::optional<SolveResult> solve(const Matrix& A, const Vec& b);

/// Canonical basis of the null space of A.
Subspace kernel(const Matrix& A);

int rank(const Matrix& A);
bool is_invertible(const Matrix& A);
Matrix inverse(const Matrix& A);

/// Canonical RREF of the matrix (zero rows dropped).
Matrix rref(const Matrix& A);

/// { v : v^T G u = 0 for all u in U } for a (not necessarily definite)
/// symmetric bilinear form given by its Gram matrix.
Subspace orthogonal_complement(const Subspace& U, const Matrix& gram);

}  // namespace nilflat
