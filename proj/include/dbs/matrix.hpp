#pragma once

// Dense matrices over an exact ring (Rational or MPoly).  Entries carry their
// own arithmetic, so the only ring-specific input is the prototype used for
// zero and one.

#include <string>
#include <utility>
#include <vector>

#include "dbs/rational.hpp"

namespace dbs {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(int k, const T& zero, const T& one) {
    Matrix m(k, k, zero);
    for (int i = 0; i < k; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  // 0-based access
  T& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || a.cols_ == 0) throw InvalidInput("matrix shape mismatch in product");
    Matrix c(a.rows_, b.cols_, a(0, 0));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (int k = 1; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
        c(i, j) = std::move(acc);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, data_.empty() ? T() : data_[0]);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows/columns [0, r) x [0, c).
  Matrix leading(int r, int c) const {
    Matrix s(r, c, (*this)(0, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) s(i, j) = (*this)(i, j);
    return s;
  }

  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()), (*this)(0, 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_, f(data_.at(0)));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

inline QMatrix q_identity(int k) { return QMatrix::identity(k, Rational(0), Rational(1)); }

/// A matrix together with its inverse; products and inverses stay exact
/// without ever inverting a general matrix.
template <class T>
struct Invertible {
  Matrix<T> mat;
  Matrix<T> inv;

  Invertible inverse() const { return {inv, mat}; }
  friend Invertible operator*(const Invertible& a, const Invertible& b) {
    return {a.mat * b.mat, b.inv * a.inv};
  }
};

// Rational helpers
Rational det(const QMatrix& m);
int rank(const QMatrix& m);
std::string to_string(const QMatrix& m);

bool is_unit_lower(const QMatrix& m);
bool is_unit_upper(const QMatrix& m);
bool is_lower(const QMatrix& m);
bool is_upper(const QMatrix& m);
bool is_diagonal(const QMatrix& m);

}  // namespace dbs
