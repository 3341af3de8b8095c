#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dgfree/errors.hpp"
#include "dgfree/rational.hpp"

namespace dgfree {

// Small dense row-major matrix over a field-like scalar (Rational, Surd).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols), T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (auto& row : rows) {
      if (static_cast<int>(row.size()) != c_) throw DimensionMismatch("ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i * c_ + j)]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i * c_ + j)]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (int j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
      }
    return p;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  // Gauss-Jordan; nullopt when singular.
  std::optional<Matrix> inverse() const {
    if (!square()) throw DimensionMismatch("inverse of non-square matrix");
    int n = r_;
    Matrix m(*this), inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (!(m(i, col) == T(0))) {
          piv = i;
          break;
        }
      if (piv < 0) return std::nullopt;
      if (piv != col)
        for (int j = 0; j < n; ++j) {
          std::swap(m(piv, j), m(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      T d = T(1) / m(col, col);
      for (int j = 0; j < n; ++j) {
        m(col, j) *= d;
        inv(col, j) *= d;
      }
      for (int i = 0; i < n; ++i) {
        if (i == col || m(i, col) == T(0)) continue;
        T f = m(i, col);
        for (int j = 0; j < n; ++j) {
          m(i, j) -= f * m(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  T determinant() const {
    if (!square()) throw DimensionMismatch("determinant of non-square matrix");
    int n = r_;
    Matrix m(*this);
    T det(1);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (!(m(i, col) == T(0))) {
          piv = i;
          break;
        }
      if (piv < 0) return T(0);
      if (piv != col) {
        for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
        det = -det;
      }
      det *= m(col, col);
      for (int i = col + 1; i < n; ++i) {
        if (m(i, col) == T(0)) continue;
        T f = m(i, col) / m(col, col);
        for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return det;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < r_; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < c_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void same_shape(const Matrix& o) const {
    if (o.r_ != r_ || o.c_ != c_) throw DimensionMismatch("matrix shape mismatch");
  }

  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;

}  // namespace dgfree
