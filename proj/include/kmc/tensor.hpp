#pragma once

#include <kmc/linalg.hpp>
#include <kmc/rational.hpp>

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace kmc {

/// Dense multi-index array over a frame of dimension d with p contravariant
/// and q covariant slots. Entries are stored row-major with the
/// contravariant indices first: T(a_1..a_p, b_1..b_q).
///
/// Index conventions used throughout the library:
///   connection  Gamma(k, i, j)  = e_k-component of nabla_{e_i} e_j      (1,2)
///   curvature   R(l, k, i, j)   = e_l-component of R(e_i, e_j) e_k     (1,3)
///   lowered     R(i, j, k, l)   = g(R(e_i, e_j) e_k, e_l)              (0,4)
///   Ricci       S(i, j)         = trace of V -> R(V, e_i) e_j           (0,2)
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t dim, std::size_t contravariant, std::size_t covariant)
      : dim_(dim), contra_(contravariant), co_(covariant), entries_(ipow(dim, contravariant + covariant)) {}

  std::size_t dim() const { return dim_; }
  std::size_t contravariant() const { return contra_; }
  std::size_t covariant() const { return co_; }
  std::size_t rank() const { return contra_ + co_; }
  std::size_t size() const { return entries_.size(); }

  std::span<const Rational> entries() const { return entries_; }
  std::span<Rational> entries() { return entries_; }

  template <typename... I>
  Rational& operator()(I... idx) {
    const std::array<std::size_t, sizeof...(I)> ix{static_cast<std::size_t>(idx)...};
    return entries_[flat(ix)];
  }
  template <typename... I>
  const Rational& operator()(I... idx) const {
    const std::array<std::size_t, sizeof...(I)> ix{static_cast<std::size_t>(idx)...};
    return entries_[flat(ix)];
  }

  Rational& at(std::span<const std::size_t> idx) { return entries_[flat(idx)]; }
  const Rational& at(std::span<const std::size_t> idx) const { return entries_[flat(idx)]; }

  /// Multi-index of the given flat position.
  std::vector<std::size_t> unflatten(std::size_t pos) const {
    std::vector<std::size_t> idx(rank());
    for (std::size_t s = rank(); s-- > 0;) {
      idx[s] = pos % dim_;
      pos /= dim_;
    }
    return idx;
  }

  bool is_zero() const {
    for (const auto& x : entries_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  bool same_shape(const Tensor& o) const { return dim_ == o.dim_ && contra_ == o.contra_ && co_ == o.co_; }

  Rational max_abs() const {
    Rational m = 0;
    for (const auto& x : entries_) {
      if (x.abs() > m) m = x.abs();
    }
    return m;
  }

  friend Tensor operator-(Tensor a, const Tensor& b) {
    if (!a.same_shape(b)) throw Error(ErrorCode::ShapeMismatch, "tensor difference");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] -= b.entries_[i];
    return a;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) {
    if (!a.same_shape(b)) throw Error(ErrorCode::ShapeMismatch, "tensor sum");
    for (std::size_t i = 0; i < a.entries_.size(); ++i) a.entries_[i] += b.entries_[i];
    return a;
  }

  friend Tensor operator*(const Rational& s, Tensor t) {
    for (auto& x : t.entries_) x *= s;
    return t;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) = default;

  static Tensor from_matrix(const Matrix& m, std::size_t contravariant) {
    if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "tensor from non-square matrix");
    Tensor t(m.rows(), contravariant, 2 - contravariant);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
    return t;
  }

  Matrix to_matrix() const {
    if (rank() != 2) throw Error(ErrorCode::ShapeMismatch, "to_matrix needs a rank-2 tensor");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

 private:
  static std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  }

  std::size_t flat(std::span<const std::size_t> idx) const {
    if (idx.size() != rank()) throw Error(ErrorCode::DimensionMismatch, "tensor index arity");
    std::size_t pos = 0;
    for (auto i : idx) {
      if (i >= dim_) throw Error(ErrorCode::DimensionMismatch, "tensor index out of range");
      pos = pos * dim_ + i;
    }
    return pos;
  }

  std::size_t dim_ = 0;
  std::size_t contra_ = 0;
  std::size_t co_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace kmc
