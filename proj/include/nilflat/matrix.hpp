#pragma once

#include <initializer_list>
#include <stdexcept>

#include "nilflat/rational.hpp"

namespace nilflat {

/// Dense rational matrix, row-major. Sized for n <= 16 ambient dimensions;
/// no sparse storage.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * static_cast<size_t>(cols_));
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("Matrix: ragged rows");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("Matrix: row size");
      for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("Matrix: col size");
      for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][static_cast<size_t>(i)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[idx(i, j)]; }
  const Rational& operator()(int i, int j) const { return a_[idx(i, j)]; }

  Vec row(int i) const {
    Vec r(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = (*this)(i, j);
    return r;
  }
  Vec col(int j) const {
    Vec c(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<size_t>(i)] = (*this)(i, j);
    return c;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix::apply: size");
    Vec y(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      Rational s;
      for (int j = 0; j < cols_; ++j) {
        const Rational& m = (*this)(i, j);
        if (!m.is_zero() && !x[static_cast<size_t>(j)].is_zero()) s += m * x[static_cast<size_t>(j)];
      }
      y[static_cast<size_t>(i)] = s;
    }
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b, "sum");
    Matrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b, "difference");
    Matrix c(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }
  friend Matrix operator*(const Rational& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = c * a.a_[i];
    return r;
  }
  Matrix operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Matrix: index");
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }
  void check_same_shape(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("Matrix: ") + what + " shape mismatch");
  }

  int rows_;
  int cols_;
  std::vector<Rational> a_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

}  // namespace nilflat
