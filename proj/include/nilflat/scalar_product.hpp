#pragma once

#include <utility>

#include "nilflat/linear.hpp"

namespace nilflat {

/// Nondegenerate symmetric bilinear form on Q^n with its signature (k, l)
/// computed once by rational congruence diagonalization. Degenerate or
/// asymmetric Gram matrices are rejected at construction.
class ScalarProduct {
public:
  explicit ScalarProduct(Matrix gram);

  int dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return inv_; }
  std::pair<int, int> signature() const { return {plus_, minus_}; }

  Rational inner(const Vec& x, const Vec& y) const;

  /// True when G A + A^T G = 0, i.e. A is skew for this form.
  bool is_skew(const Matrix& a) const;
  /// True when A^T G A = G.
  bool is_isometry(const Matrix& a) const;

  friend bool operator==(const ScalarProduct& a, const ScalarProduct& b) { return a.gram_ == b.gram_; }

private:
  Matrix gram_;
  Matrix inv_;
  int plus_ = 0;
  int minus_ = 0;
};

}  // namespace nilflat
