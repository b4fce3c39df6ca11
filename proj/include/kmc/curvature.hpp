#pragma once

#include <kmc/lie_frame.hpp>
#include <kmc/tensor.hpp>

#include <optional>

namespace kmc {

/// Metric as a (0,2) tensor.
inline Tensor metric_tensor(const MetricFrame& m) { return Tensor::from_matrix(m.metric(), 0); }

/// Levi-Civita connection of an invariant metric, Gamma(k, i, j) being the
/// e_k-component of nabla_{e_i} e_j. With constant g(e_i, e_j) the Koszul
/// formula reduces to its bracket terms:
///   2 g(nabla_X Y, Z) = -g(X, [Y,Z]) - g(Y, [X,Z]) + g(Z, [X,Y]).
inline Tensor levi_civita_connection(const MetricFrame& m) {
  const std::size_t d = m.dim();
  const auto& c = m.frame();
  const auto& g = m.metric();
  // g(e_a, [e_b, e_c])
  auto g_bracket = [&](std::size_t a, std::size_t b, std::size_t cc) {
    Rational s = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (!c.constant(b, cc, k).is_zero()) s += c.constant(b, cc, k) * g(a, k);
    }
    return s;
  };
  Tensor lowered(d, 0, 3);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        lowered(i, j, l) = (-g_bracket(i, j, l) - g_bracket(j, i, l) + g_bracket(l, i, j)) / 2;

  const auto& g_inv = m.inverse_metric();
  Tensor gamma(d, 1, 2);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < d; ++l) {
          if (!g_inv(k, l).is_zero()) s += g_inv(k, l) * lowered(i, j, l);
        }
        gamma(k, i, j) = s;
      }
  return gamma;
}

/// nabla_X Y for constant-coefficient vector fields X, Y.
inline Vector covariant_derivative(const Tensor& gamma, const Vector& x, const Vector& y) {
  const std::size_t d = gamma.dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) out[k] += w * gamma(k, i, j);
    }
  }
  return out;
}

/// R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y], stored as
/// R(l, k, i, j) = e_l-component of R(e_i, e_j) e_k.
inline Tensor riemann_curvature(const MetricFrame& m, const Tensor& gamma) {
  const std::size_t d = m.dim();
  const auto& c = m.frame();
  Tensor r(d, 1, 3);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Rational s = 0;
          for (std::size_t p = 0; p < d; ++p) {
            s += gamma(p, j, k) * gamma(l, i, p);
            s -= gamma(p, i, k) * gamma(l, j, p);
            if (!c.constant(i, j, p).is_zero()) s -= c.constant(i, j, p) * gamma(l, p, k);
          }
          r(l, k, i, j) = s;
        }
  return r;
}

/// R(X, Y) Z for arbitrary vectors.
inline Vector apply_curvature(const Tensor& r, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t d = r.dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (z[k].is_zero()) continue;
        const Rational w = x[i] * y[j] * z[k];
        for (std::size_t l = 0; l < d; ++l) out[l] += w * r(l, k, i, j);
      }
    }
  }
  return out;
}

/// The endomorphism Z -> R(e_i, e_j) Z as a matrix.
inline Matrix curvature_operator(const Tensor& r, std::size_t i, std::size_t j) {
  const std::size_t d = r.dim();
  Matrix a(d, d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k) a(l, k) = r(l, k, i, j);
  return a;
}

/// (0,4) curvature R(i, j, k, l) = g(R(e_i, e_j) e_k, e_l).
inline Tensor lower_curvature(const MetricFrame& m, const Tensor& r) {
  const std::size_t d = m.dim();
  const auto& g = m.metric();
  Tensor out(d, 0, 4);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Rational s = 0;
          for (std::size_t p = 0; p < d; ++p) {
            if (!g(p, l).is_zero()) s += r(p, k, i, j) * g(p, l);
          }
          out(i, j, k, l) = s;
        }
  return out;
}

/// S(X, Y) = trace of V -> R(V, X) Y.
inline Tensor ricci_tensor(const MetricFrame& m, const Tensor& r) {
  const std::size_t d = m.dim();
  Tensor s(d, 0, 2);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Rational t = 0;
      for (std::size_t v = 0; v < d; ++v) t += r(v, y, v, x);
      s(x, y) = t;
    }
  return s;
}

inline Rational bilinear(const Tensor& b, const Vector& x, const Vector& y) {
  const std::size_t d = b.dim();
  Rational s = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!y[j].is_zero()) s += x[i] * b(i, j) * y[j];
    }
  }
  return s;
}

inline Rational scalar_curvature(const MetricFrame& m, const Tensor& ricci) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) s += m.inverse_metric()(i, j) * ricci(i, j);
  return s;
}

/// K(X, Y) = g(R(X,Y)Y, X) / (g(X,X) g(Y,Y) - g(X,Y)^2).
inline Rational sectional_curvature(const MetricFrame& m, const Tensor& r, const Vector& x, const Vector& y) {
  if (x.size() != m.dim() || y.size() != m.dim()) throw Error(ErrorCode::DimensionMismatch, "sectional curvature operands");
  const Rational xy = m.inner(x, y);
  const Rational area = m.inner(x, x) * m.inner(y, y) - xy * xy;
  if (area.is_zero()) throw Error(ErrorCode::DegeneratePlane, "vectors span no plane");
  return m.inner(apply_curvature(r, x, y, y), x) / area;
}

/// Largest |R(X,Y)Z + R(Y,Z)X + R(Z,X)Y| component over frame triples.
inline Rational first_bianchi_defect(const Tensor& r) {
  const std::size_t d = r.dim();
  Rational worst = 0;
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
          const Rational s = (r(l, z, x, y) + r(l, x, y, z) + r(l, y, z, x)).abs();
          if (s > worst) worst = s;
        }
  return worst;
}

/// Largest component of nabla_X Y - nabla_Y X - [X, Y] over frame pairs.
inline Rational torsion_defect(const MetricFrame& m, const Tensor& gamma) {
  const std::size_t d = m.dim();
  Rational worst = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Rational s = (gamma(k, i, j) - gamma(k, j, i) - m.frame().constant(i, j, k)).abs();
        if (s > worst) worst = s;
      }
  return worst;
}

/// Largest |(nabla_X g)(Y, Z)| = |g(nabla_X Y, Z) + g(Y, nabla_X Z)| over frame triples.
inline Rational metric_compatibility_defect(const MetricFrame& m, const Tensor& gamma) {
  const std::size_t d = m.dim();
  Rational worst = 0;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        const Vector ey = basis_vector(d, y);
        const Vector ez = basis_vector(d, z);
        const Vector ex = basis_vector(d, x);
        const Rational s =
            (m.inner(covariant_derivative(gamma, ex, ey), ez) + m.inner(ey, covariant_derivative(gamma, ex, ez))).abs();
        if (s > worst) worst = s;
      }
  return worst;
}

/// The constant K when R(X,Y)Z = K (g(Y,Z) X - g(X,Z) Y) holds exactly.
inline std::optional<Rational> constant_curvature(const MetricFrame& m, const Tensor& r) {
  const std::size_t d = m.dim();
  const auto& g = m.metric();
  // K is read off the first plane with nonzero area, then checked everywhere.
  const Rational k = sectional_curvature(m, r, basis_vector(d, 0), basis_vector(d, 1));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t z = 0; z < d; ++z)
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
          const Rational expected = k * (g(y, z) * Rational(l == x ? 1 : 0) - g(x, z) * Rational(l == y ? 1 : 0));
          if (r(l, z, x, y) != expected) return std::nullopt;
        }
  return k;
}

}  // namespace kmc
