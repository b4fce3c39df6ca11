#pragma once

#include <kmc/linalg.hpp>
#include <kmc/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kmc {

/// Left-invariant frame e_1..e_d of a Lie algebra, described by its
/// structure constants [e_i, e_j] = sum_k c(i, j, k) e_k. Indices are
/// 0-based here; the input layer converts from 1-based documents.
class LieFrame {
 public:
  LieFrame() = default;

  /// Validates odd dimension >= 3, antisymmetry and the Jacobi identity.
  LieFrame(std::size_t dim, std::vector<Rational> constants) : dim_(dim), c_(std::move(constants)) {
    if (dim_ < 3 || dim_ % 2 == 0)
      throw Error(ErrorCode::DimensionMismatch, "frame dimension must be odd and >= 3, got " + std::to_string(dim_));
    if (c_.size() != dim_ * dim_ * dim_) throw Error(ErrorCode::ShapeMismatch, "structure constant count");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (constant(i, j, k) != -constant(j, i, k))
            throw Error(ErrorCode::AntisymmetryViolation, "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                              "," + std::to_string(k + 1) + ") is not antisymmetric");
    if (auto bad = jacobi_violation()) throw Error(ErrorCode::JacobiViolation, *bad);
  }

  /// Sets c(i,j,k) and c(j,i,k) = -value on a zero-initialised array. Only
  /// for building constant arrays before handing them to the constructor.
  static void set_bracket(std::vector<Rational>& c, std::size_t dim, std::size_t i, std::size_t j, std::size_t k,
                          const Rational& value) {
    c.at((i * dim + j) * dim + k) = value;
    c.at((j * dim + i) * dim + k) = -value;
  }

  std::size_t dim() const { return dim_; }
  /// n with dim = 2n + 1.
  std::size_t half_dim() const { return (dim_ - 1) / 2; }

  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rational>& constants() const { return c_; }

  Vector bracket_basis(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
    return v;
  }

  /// Bilinear extension of the bracket to constant-coefficient vectors.
  Vector bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket operand length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const Rational w = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const Rational& c = constant(i, j, k);
          if (!c.is_zero()) out[k] += w * c;
        }
      }
    }
    return out;
  }

  /// Description of the first index triple where the cyclic sum
  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] is nonzero.
  std::optional<std::string> jacobi_violation() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k)
          for (std::size_t l = 0; l < dim_; ++l) {
            Rational s = 0;
            for (std::size_t m = 0; m < dim_; ++m) {
              s += constant(i, j, m) * constant(m, k, l);
              s += constant(j, k, m) * constant(m, i, l);
              s += constant(k, i, m) * constant(m, j, l);
            }
            if (!s.is_zero())
              return "Jacobi identity fails for (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
                     std::to_string(k + 1) + ")";
          }
    return std::nullopt;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// A Lie frame together with a constant (left-invariant) inner product.
class MetricFrame {
 public:
  MetricFrame() = default;

  MetricFrame(LieFrame frame, Matrix g) : frame_(std::move(frame)), g_(std::move(g)) {
    if (g_.rows() != frame_.dim() || !g_.square()) throw Error(ErrorCode::InvalidMetric, "metric has the wrong shape");
    if (!g_.is_symmetric()) throw Error(ErrorCode::InvalidMetric, "metric is not symmetric");
    if (!is_positive_definite(g_)) throw Error(ErrorCode::InvalidMetric, "metric is not positive definite");
    g_inv_ = *inverse(g_);
  }

  static MetricFrame orthonormal(LieFrame frame) {
    const auto d = frame.dim();
    return MetricFrame(std::move(frame), Matrix::identity(d));
  }

  const LieFrame& frame() const { return frame_; }
  std::size_t dim() const { return frame_.dim(); }
  const Matrix& metric() const { return g_; }
  const Matrix& inverse_metric() const { return g_inv_; }

  Rational inner(const Vector& x, const Vector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "inner product operands");
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (!y[j].is_zero() && !g_(i, j).is_zero()) s += x[i] * g_(i, j) * y[j];
      }
    }
    return s;
  }

  Rational norm_squared(const Vector& x) const { return inner(x, x); }

 private:
  LieFrame frame_;
  Matrix g_;
  Matrix g_inv_;
};

}  // namespace kmc
