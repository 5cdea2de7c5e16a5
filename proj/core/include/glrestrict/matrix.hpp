#pragma once

#include "glrestrict/poly.hpp"
#include "glrestrict/rational_expr.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace glr {

/// Dense rectangular matrix with 1-based element access.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw std::out_of_range("matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    return (i - 1) * cols_ + (j - 1);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<MultiPoly>;
using ExprMatrix = Matrix<RationalExpr>;

/// Rows and columns picked by 1-based index lists; rows may repeat or be unordered.
template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix<T> out(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      if (rows[a] < 1 || static_cast<std::size_t>(rows[a]) > m.rows() || cols[b] < 1 ||
          static_cast<std::size_t>(cols[b]) > m.cols()) {
        throw std::out_of_range("submatrix index out of range");
      }
      out(a + 1, b + 1) = m(rows[a], cols[b]);
    }
  }
  return out;
}

/// 1..count as an index list.
inline std::vector<int> iota_indices(int count) {
  std::vector<int> v;
  for (int i = 1; i <= count; ++i) v.push_back(i);
  return v;
}

/// Left upper corner [X]_{ab}.
template <class T>
Matrix<T> corner(const Matrix<T>& m, int a, int b) {
  return submatrix(m, iota_indices(a), iota_indices(b));
}

template <class T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
  if (top.rows() > 0 && bottom.rows() > 0 && top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
  const std::size_t cols = top.rows() > 0 ? top.cols() : bottom.cols();
  Matrix<T> out(top.rows() + bottom.rows(), cols);
  for (std::size_t i = 1; i <= top.rows(); ++i)
    for (std::size_t j = 1; j <= cols; ++j) out(i, j) = top(i, j);
  for (std::size_t i = 1; i <= bottom.rows(); ++i)
    for (std::size_t j = 1; j <= cols; ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& left, const Matrix<T>& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix<T> out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 1; i <= left.rows(); ++i) {
    for (std::size_t j = 1; j <= left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 1; j <= right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= b.cols(); ++j) {
      T acc(0);
      for (std::size_t k = 1; k <= a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

inline ExprMatrix to_expr(const PolyMatrix& m) {
  ExprMatrix out(m.rows(), m.cols());
  for (std::size_t i = 1; i <= m.rows(); ++i)
    for (std::size_t j = 1; j <= m.cols(); ++j) out(i, j) = RationalExpr(m(i, j));
  return out;
}

/// Exact determinant: cofactor expansion up to 4x4, fraction-free Bareiss above.
/// Throws std::invalid_argument for non-square input.
MultiPoly det(const PolyMatrix& m);

/// Determinant of a matrix of rational expressions, clearing each row's denominators.
RationalExpr det(const ExprMatrix& m);

/// Symbolic unitriangular matrix with entries x_ij (i<j) of the given kind.
PolyMatrix unitriangular(int n, VarKind kind);

}  // namespace glr
