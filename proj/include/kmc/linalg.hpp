#pragma once

#include <kmc/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace kmc {

/// Dense row-major rational matrix. Also used for (1,1) tensors, where
/// column b holds the image of the b-th frame vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorCode::ShapeMismatch, "column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Largest absolute entry; zero for the empty matrix.
  Rational max_abs() const {
    Rational m = 0;
    for (const auto& x : data_) {
      if (x.abs() > m) m = x.abs();
    }
    return m;
  }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) s += (*this)(i, j) * v[j];
      }
      out[i] = s;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Rational& s, Matrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

inline Rational determinant(Matrix m) {
  if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Basis of the right kernel {v : m v = 0}.
inline std::vector<Vector> nullspace(Matrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct LinearSolution {
  bool consistent = false;
  Vector solution;             // particular solution, free variables set to zero
  std::vector<std::size_t> free_variables;
};

/// Exact solve of a possibly over- or under-determined system a x = b.
inline LinearSolution solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  LinearSolution out;
  out.solution.assign(a.cols(), Rational(0));
  if (!pivots.empty() && pivots.back() == a.cols()) return out;
  out.consistent = true;
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    out.solution[pivots[r]] = aug(r, a.cols());
  }
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) out.free_variables.push_back(j);
  return out;
}

/// Sylvester's criterion on a symmetric matrix.
inline bool is_positive_definite(const Matrix& g) {
  if (!g.is_symmetric()) return false;
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (determinant(minor).sign() <= 0) return false;
  }
  return true;
}

}  // namespace kmc
