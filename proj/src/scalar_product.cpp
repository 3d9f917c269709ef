#include "nilflat/scalar_product.hpp"

namespace nilflat {

namespace {

// Sign counts of a congruence diagonalization D = P G P^T. Stays in Q, no
// eigenvalues involved.
std::pair<int, int> diagonalize_signs(Matrix m) {
  const int n = m.rows();
  int plus = 0, minus = 0;
  for (int k = 0; k < n; ++k) {
    if (m(k, k).is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, i).is_zero()) { swap = i; break; }
      if (swap >= 0) {
        for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
        for (int i = 0; i < n; ++i) std::swap(m(i, k), m(i, swap));
      } else {
        int off = -1;
        for (int i = k + 1; i < n; ++i)
          if (!m(k, i).is_zero()) { off = i; break; }
        if (off < 0) continue;  // zero row in the remaining block
        // row/col addition makes the diagonal entry 2*m(k,off) != 0
        for (int j = 0; j < n; ++j) m(k, j) += m(off, j);
        for (int i = 0; i < n; ++i) m(i, k) += m(i, off);
      }
    }
    const Rational pivot = m(k, k);
    if (pivot.is_zero()) continue;
    if (pivot.sign() > 0) ++plus; else ++minus;
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const Rational f = m(i, k) / pivot;
      for (int j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      for (int j = 0; j < n; ++j) m(j, i) -= f * m(j, k);
    }
  }
  return {plus, minus};
}

}  // namespace

ScalarProduct::ScalarProduct(Matrix gram) : gram_(std::move(gram)), inv_(0, 0) {
  if (!gram_.is_square()) throw std::invalid_argument("ScalarProduct: Gram matrix not square");
  if (gram_ != gram_.transpose()) throw std::invalid_argument("ScalarProduct: Gram matrix not symmetric");
  if (!is_invertible(gram_)) throw std::invalid_argument("ScalarProduct: degenerate Gram matrix");
  inv_ = inverse(gram_);
  auto [p, m] = diagonalize_signs(gram_);
  plus_ = p;
  minus_ = m;
  if (plus_ + minus_ != dim()) throw std::logic_error("ScalarProduct: signature count mismatch");
}

Rational ScalarProduct::inner(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw std::invalid_argument("ScalarProduct: inner dimension mismatch");
  Rational s;
  for (int i = 0; i < dim(); ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (gram_(i, j).is_zero() || y[static_cast<size_t>(j)].is_zero()) continue;
      s += x[static_cast<size_t>(i)] * gram_(i, j) * y[static_cast<size_t>(j)];
    }
  }
  return s;
}

bool ScalarProduct::is_skew(const Matrix& a) const {
  return (gram_ * a + a.transpose() * gram_).is_zero();
}

bool ScalarProduct::is_isometry(const Matrix& a) const {
  return a.transpose() * gram_ * a == gram_;
}

}  // namespace nilflat
