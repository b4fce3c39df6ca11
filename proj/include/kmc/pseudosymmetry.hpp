#pragma once

#include <kmc/curvature.hpp>
#include <kmc/lie_frame.hpp>
#include <kmc/tensor.hpp>

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace kmc {

/// (X wedge_B Y) Z = B(Y, Z) X - B(X, Z) Y.
inline Vector wedge_endomorphism(const Tensor& b, const Vector& x, const Vector& y, const Vector& z) {
  if (x.size() != b.dim() || y.size() != b.dim() || z.size() != b.dim())
    throw Error(ErrorCode::DimensionMismatch, "wedge endomorphism operands");
  return bilinear(b, y, z) * x - bilinear(b, x, z) * y;
}

/// Matrix of Z -> (e_i wedge_B e_j) Z.
inline Matrix wedge_operator(const Tensor& b, std::size_t i, std::size_t j) {
  const std::size_t d = b.dim();
  Matrix a(d, d);
  for (std::size_t z = 0; z < d; ++z) {
    a(i, z) += b(j, z);
    a(j, z) -= b(i, z);
  }
  return a;
}

/// Action of a family of endomorphisms A(X, Y) on T as a derivation:
///   (A(X,Y) . T)(..) = sum over upper slots of A applied to that slot
///                      - sum over lower slots of T with A applied to the argument.
/// The result has two extra trailing covariant slots (X, Y).
inline Tensor derivation_action(const Tensor& t, const std::function<Matrix(std::size_t, std::size_t)>& family) {
  const std::size_t d = t.dim();
  const std::size_t p = t.contravariant();
  const std::size_t rank = t.rank();
  Tensor out(d, p, t.covariant() + 2);
  std::vector<std::size_t> idx(rank + 2);
  std::vector<std::size_t> shifted(rank);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const Matrix a = family(x, y);
      if (a.is_zero()) continue;
      for (std::size_t pos = 0; pos < t.size(); ++pos) {
        const auto base = t.unflatten(pos);
        Rational acc = 0;
        for (std::size_t slot = 0; slot < rank; ++slot) {
          shifted = base;
          for (std::size_t m = 0; m < d; ++m) {
            // upper slot: A^{a}_{m} T^{..m..};  lower slot: -A^{m}_{b} T_{..m..}
            const Rational& coeff = slot < p ? a(base[slot], m) : a(m, base[slot]);
            if (coeff.is_zero()) continue;
            shifted[slot] = m;
            const Rational& entry = t.at(shifted);
            if (entry.is_zero()) continue;
            if (slot < p) {
              acc += coeff * entry;
            } else {
              acc -= coeff * entry;
            }
          }
        }
        std::copy(base.begin(), base.end(), idx.begin());
        idx[rank] = x;
        idx[rank + 1] = y;
        out.at(idx) = acc;
      }
    }
  return out;
}

/// (R . T)(X_1..X_k; X, Y) = (R(X, Y) . T)(X_1..X_k).
inline Tensor curvature_action(const Tensor& r, const Tensor& t) {
  if (t.rank() < 1) throw Error(ErrorCode::PreconditionViolation, "R . T needs k >= 1");
  if (r.dim() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "R . T operands");
  return derivation_action(t, [&](std::size_t i, std::size_t j) { return curvature_operator(r, i, j); });
}

/// Q(B, T)(X_1..X_k; X, Y) = ((X wedge_B Y) . T)(X_1..X_k).
inline Tensor q_tensor(const Tensor& b, const Tensor& t) {
  if (t.rank() < 1) throw Error(ErrorCode::PreconditionViolation, "Q(B, T) needs k >= 1");
  if (b.dim() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "Q(B, T) operands");
  return derivation_action(t, [&](std::size_t i, std::size_t j) { return wedge_operator(b, i, j); });
}

/// Vector-valued Q(B, R) written out term by term:
///   (X^Y) R(X1,X2)X3 - R((X^Y)X1, X2)X3 - R(X1, (X^Y)X2)X3 - R(X1,X2)(X^Y)X3
/// with ^ = wedge_B. Laid out like derivation_action on the (1,3) curvature:
/// out(l, x3, x1, x2, x, y).
inline Tensor q_tensor_expanded(const Tensor& b, const Tensor& r) {
  const std::size_t d = r.dim();
  Tensor out(d, 1, 5);
  for (std::size_t x1 = 0; x1 < d; ++x1)
    for (std::size_t x2 = 0; x2 < d; ++x2)
      for (std::size_t x3 = 0; x3 < d; ++x3)
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y) {
            const Vector ex = basis_vector(d, x);
            const Vector ey = basis_vector(d, y);
            const Vector e1 = basis_vector(d, x1);
            const Vector e2 = basis_vector(d, x2);
            const Vector e3 = basis_vector(d, x3);
            auto wedge = [&](const Vector& z) { return wedge_endomorphism(b, ex, ey, z); };
            const Vector v = wedge(apply_curvature(r, e1, e2, e3)) - apply_curvature(r, wedge(e1), e2, e3) -
                             apply_curvature(r, e1, wedge(e2), e3) - apply_curvature(r, e1, e2, wedge(e3));
            for (std::size_t l = 0; l < d; ++l) out(l, x3, x1, x2, x, y) = v[l];
          }
  return out;
}

struct Proportionality {
  enum class Kind { BothZero, T2Zero, Proportional, Independent };
  Kind kind = Kind::Independent;
  std::optional<Rational> factor;  // set only for Proportional

  bool holds() const { return kind == Kind::BothZero || kind == Kind::Proportional; }
};

constexpr std::string_view to_string(Proportionality::Kind k) {
  switch (k) {
    case Proportionality::Kind::BothZero: return "BothZero";
    case Proportionality::Kind::T2Zero: return "T2Zero";
    case Proportionality::Kind::Proportional: return "Proportional";
    case Proportionality::Kind::Independent: return "Independent";
  }
  return "?";
}

/// Exact test of T1 = L T2 entrywise.
inline Proportionality proportionality_fit(const Tensor& t1, const Tensor& t2) {
  if (!t1.same_shape(t2)) throw Error(ErrorCode::ShapeMismatch, "proportionality operands");
  Proportionality out;
  const auto a = t1.entries();
  const auto b = t2.entries();
  std::size_t pivot = b.size();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot == b.size()) {
    out.kind = t1.is_zero() ? Proportionality::Kind::BothZero : Proportionality::Kind::T2Zero;
    return out;
  }
  const Rational factor = a[pivot] / b[pivot];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != factor * b[i]) return out;
  }
  out.kind = Proportionality::Kind::Proportional;
  out.factor = factor;
  return out;
}

struct SymmetryReport {
  bool semisymmetric = false;
  bool q_g_zero = false;
  bool q_s_zero = false;
  Proportionality pseudosymmetry;     // R.R against Q(g, R)
  Proportionality rgps;               // R.R against Q(S, R), (0,6) tensors
  Proportionality rgps_vector_form;   // same condition on the (1,5) vector-valued forms

  std::optional<Rational> pseudosymmetric_constant() const { return pseudosymmetry.factor; }
  std::optional<Rational> rgps_constant() const { return rgps.factor; }
  bool is_pseudosymmetric() const { return pseudosymmetry.holds(); }
  bool is_rgps() const { return rgps.holds(); }
};

struct CurvatureActions {
  Tensor rr;   // R . R on the (0,4) curvature
  Tensor qg;   // Q(g, R)
  Tensor qs;   // Q(S, R)
};

inline CurvatureActions curvature_actions(const MetricFrame& m, const Tensor& r, const Tensor& ricci) {
  const Tensor lowered = lower_curvature(m, r);
  return {curvature_action(r, lowered), q_tensor(metric_tensor(m), lowered), q_tensor(ricci, lowered)};
}

inline SymmetryReport classify_symmetry(const MetricFrame& m, const Tensor& r, const Tensor& ricci) {
  const auto act = curvature_actions(m, r, ricci);
  SymmetryReport rep;
  rep.semisymmetric = act.rr.is_zero();
  rep.q_g_zero = act.qg.is_zero();
  rep.q_s_zero = act.qs.is_zero();
  rep.pseudosymmetry = proportionality_fit(act.rr, act.qg);
  rep.rgps = proportionality_fit(act.rr, act.qs);
  rep.rgps_vector_form = proportionality_fit(curvature_action(r, r), q_tensor(ricci, r));
  return rep;
}

}  // namespace kmc
