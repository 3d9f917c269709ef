#include "nilflat/linear.hpp"

#include <algorithm>

namespace nilflat {

namespace {

int leading_index(const std::vector<mpz_class>& a) {
  for (size_t j = 0; j < a.size(); ++j)
    if (sgn(a[j]) != 0) return static_cast<int>(j);
  return -1;
}

}  // namespace

void RowReducer::normalize_content(IntRow& r) {
  r.pivot = leading_index(r.a);
  if (r.pivot < 0) return;
  mpz_class g = 0;
  for (const auto& x : r.a) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  const bool flip = sgn(r.a[static_cast<size_t>(r.pivot)]) < 0;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& x : r.a)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void RowReducer::reduce_against(IntRow& r) const {
  for (const auto& p : rows_) {
    const size_t pc = static_cast<size_t>(p.pivot);
    if (sgn(r.a[pc]) == 0) continue;
    // r := pivotval * r - r[pc] * p, fraction-free
    const mpz_class pivotval = p.a[pc];
    const mpz_class factor = r.a[pc];
    for (size_t j = 0; j < r.a.size(); ++j) {
      const bool pz = sgn(p.a[j]) == 0;
      const bool rz = sgn(r.a[j]) == 0;
      if (pz && rz) continue;
      r.a[j] *= pivotval;
      if (!pz) mpz_submul(r.a[j].get_mpz_t(), factor.get_mpz_t(), p.a[j].get_mpz_t());
    }
    normalize_content(r);
    if (r.pivot < 0) return;
  }
}

bool RowReducer::insert(const Vec& row) {
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("RowReducer: row size");
  // clear denominators
  mpz_class l = 1;
  for (const auto& x : row)
    if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> a(row.size());
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    mpz_class q = l / row[j].den();
    a[j] = row[j].num() * q;
  }
  return insert_int(std::move(a));
}

bool RowReducer::insert_int(std::vector<mpz_class> rowdata) {
  if (static_cast<int>(rowdata.size()) != cols_) throw std::invalid_argument("RowReducer: row size");
  IntRow r{std::move(rowdata), -1};
  normalize_content(r);
  if (r.pivot < 0) return false;
  reduce_against(r);
  if (r.pivot < 0) return false;
  // eliminate the new pivot column from the existing rows
  const size_t npc = static_cast<size_t>(r.pivot);
  const mpz_class nv = r.a[npc];
  for (auto& p : rows_) {
    if (sgn(p.a[npc]) == 0) continue;
    const mpz_class factor = p.a[npc];
    for (size_t j = 0; j < p.a.size(); ++j) {
      const bool rz = sgn(r.a[j]) == 0;
      if (rz && sgn(p.a[j]) == 0) continue;
      p.a[j] *= nv;
      if (!rz) mpz_submul(p.a[j].get_mpz_t(), factor.get_mpz_t(), r.a[j].get_mpz_t());
    }
    normalize_content(p);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), r.pivot,
                              [](const IntRow& p, int piv) { return p.pivot < piv; });
  rows_.insert(pos, std::move(r));
  pivots_.clear();
  for (const auto& p : rows_) pivots_.push_back(p.pivot);
  return true;
}

std::vector<Vec> RowReducer::rref_rows() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& p : rows_) {
    const mpz_class& lead = p.a[static_cast<size_t>(p.pivot)];
    Vec r(static_cast<size_t>(cols_));
    for (size_t j = 0; j < p.a.size(); ++j)
      if (sgn(p.a[j]) != 0) r[j] = Rational(p.a[j], lead);
    out.push_back(std::move(r));
  }
  return out;
}

Subspace::Subspace(int ambient_dim, const std::vector<Vec>& spanning) : ambient_(ambient_dim), basis_(0, 0) {
  RowReducer red(ambient_dim);
  for (const auto& v : spanning) red.insert(v);
  basis_ = Matrix::from_rows(red.rref_rows(), ambient_dim);
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient_dim; ++i) rows.push_back(basis_vec(ambient_dim, i));
  return Subspace(ambient_dim, rows);
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  RowReducer red(ambient_);
  for (int i = 0; i < basis_.rows(); ++i) red.insert(basis_.row(i));
  const int r = red.rank();
  red.insert(v);
  return red.rank() == r;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
  for (int i = 0; i < other.dim(); ++i) rows.push_back(other.basis_vector(i));
  return Subspace(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  // x in U cap W <=> x = U^T a = W^T b; kernel of [U^T | -W^T] gives (a, b).
  const int du = dim(), dw = other.dim();
  Matrix m(ambient_, du + dw);
  for (int i = 0; i < ambient_; ++i) {
    for (int a = 0; a < du; ++a) m(i, a) = basis_(a, i);
    for (int b = 0; b < dw; ++b) m(i, du + b) = -other.basis_(b, i);
  }
  Subspace ker = kernel(m);
  std::vector<Vec> rows;
  for (int r = 0; r < ker.dim(); ++r) {
    Vec ab = ker.basis_vector(r);
    Vec x = zero_vec(ambient_);
    for (int a = 0; a < du; ++a)
      if (!ab[static_cast<size_t>(a)].is_zero())
        x = vec_add(x, vec_scale(ab[static_cast<size_t>(a)], basis_vector(a)));
    rows.push_back(std::move(x));
  }
  return Subspace(ambient_, rows);
}

Matrix Subspace::adapted_basis() const {
  Matrix b(ambient_, ambient_);
  std::vector<bool> pivot_col(static_cast<size_t>(ambient_), false);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < ambient_; ++j) {
      b(j, i) = basis_(i, j);
      if (!basis_(i, j).is_zero() && !pivot_col[static_cast<size_t>(j)]) {
        // RREF rows lead with 1 at their pivot column
        bool leading = true;
        for (int jj = 0; jj < j; ++jj)
          if (!basis_(i, jj).is_zero()) { leading = false; break; }
        if (leading) pivot_col[static_cast<size_t>(j)] = true;
      }
    }
  }
  int next = dim();
  for (int j = 0; j < ambient_; ++j) {
    if (pivot_col[static_cast<size_t>(j)]) continue;
    if (next >= ambient_) break;
    b(j, next) = Rational(1);
    ++next;
  }
  if (next != ambient_ || !is_invertible(b))
    throw std::logic_error("Subspace: adapted basis construction failed");
  return b;
}

std::optional<SolveResult> solve(const Matrix& A, const Vec& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const int n = A.cols();
  RowReducer red(n + 1);
  for (int i = 0; i < A.rows(); ++i) {
    Vec row(static_cast<size_t>(n + 1));
    for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = A(i, j);
    row[static_cast<size_t>(n)] = b[static_cast<size_t>(i)];
    red.insert(row);
  }
  const auto rows = red.rref_rows();
  for (size_t i = 0; i < rows.size(); ++i)
    if (red.pivots()[i] == n) return std::nullopt;  // 0 = 1 row: inconsistent

  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : red.pivots()) is_pivot[static_cast<size_t>(p)] = true;

  Vec particular = zero_vec(n);
  for (size_t i = 0; i < rows.size(); ++i)
    particular[static_cast<size_t>(red.pivots()[i])] = rows[i][static_cast<size_t>(n)];

  std::vector<Vec> kernel_rows;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec v = zero_vec(n);
    v[static_cast<size_t>(f)] = Rational(1);
    for (size_t i = 0; i < rows.size(); ++i)
      v[static_cast<size_t>(red.pivots()[i])] = -rows[i][static_cast<size_t>(f)];
    kernel_rows.push_back(std::move(v));
  }
  return SolveResult{std::move(particular), Subspace(n, kernel_rows)};
}

Subspace kernel(const Matrix& A) {
  const int n = A.cols();
  RowReducer red(n);
  for (int i = 0; i < A.rows(); ++i) red.insert(A.row(i));
  const auto rows = red.rref_rows();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : red.pivots()) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vec> kernel_rows;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec v = zero_vec(n);
    v[static_cast<size_t>(f)] = Rational(1);
    for (size_t i = 0; i < rows.size(); ++i)
      v[static_cast<size_t>(red.pivots()[i])] = -rows[i][static_cast<size_t>(f)];
    kernel_rows.push_back(std::move(v));
  }
  return Subspace(n, kernel_rows);
}

int rank(const Matrix& A) {
  RowReducer red(A.cols());
  for (int i = 0; i < A.rows(); ++i) red.insert(A.row(i));
  return red.rank();
}

bool is_invertible(const Matrix& A) { return A.is_square() && rank(A) == A.rows(); }

Matrix inverse(const Matrix& A) {
  if (!A.is_square()) throw std::invalid_argument("inverse: not square");
  const int n = A.rows();
  RowReducer red(2 * n);
  for (int i = 0; i < n; ++i) {
    Vec row(static_cast<size_t>(2 * n));
    for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = A(i, j);
    row[static_cast<size_t>(n + i)] = Rational(1);
    red.insert(row);
  }
  const auto rows = red.rref_rows();
  if (red.rank() != n) throw std::invalid_argument("inverse: singular matrix");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    if (red.pivots()[static_cast<size_t>(i)] != i) throw std::invalid_argument("inverse: singular matrix");
    for (int j = 0; j < n; ++j) inv(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
  }
  return inv;
}

Matrix rref(const Matrix& A) {
  RowReducer red(A.cols());
  for (int i = 0; i < A.rows(); ++i) red.insert(A.row(i));
  return Matrix::from_rows(red.rref_rows(), A.cols());
}

Subspace orthogonal_complement(const Subspace& U, const Matrix& gram) {
  if (gram.rows() != U.ambient_dim() || gram.cols() != U.ambient_dim())
    throw std::invalid_argument("orthogonal_complement: ambient mismatch");
  return kernel(U.basis() * gram);
}

}  // namespace nilflat
