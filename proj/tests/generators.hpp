#pragma once

// Hand-rolled generators for the property tests. Every generator is driven
// by a caller-owned std::mt19937 so runs are reproducible from the seed.

#include <kmc/kmc.hpp>

#include <random>

namespace kmc_test {

using kmc::LieFrame;
using kmc::Matrix;
using kmc::MetricFrame;
using kmc::Rational;

inline Rational random_rational(std::mt19937& rng, int bound = 6, int den_bound = 3) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

/// [e2,e3] = c1 e1, [e3,e1] = c2 e2, [e1,e2] = c3 e3.
inline LieFrame milnor_frame(const Rational& c1, const Rational& c2, const Rational& c3) {
  std::vector<Rational> c(27);
  LieFrame::set_bracket(c, 3, 1, 2, 0, c1);
  LieFrame::set_bracket(c, 3, 2, 0, 1, c2);
  LieFrame::set_bracket(c, 3, 0, 1, 2, c3);
  return LieFrame(3, std::move(c));
}

inline MetricFrame family(const Rational& c1, const Rational& c2, const Rational& c3) {
  return MetricFrame::orthonormal(milnor_frame(c1, c2, c3));
}

/// R acting on R^2 = span(e2, e3) by a 2x2 matrix; solvable, usually not unimodular.
inline LieFrame semidirect_frame(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  std::vector<Rational> k(27);
  LieFrame::set_bracket(k, 3, 0, 1, 1, a);
  LieFrame::set_bracket(k, 3, 0, 1, 2, c);
  LieFrame::set_bracket(k, 3, 0, 2, 1, b);
  LieFrame::set_bracket(k, 3, 0, 2, 2, d);
  return LieFrame(3, std::move(k));
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t d) {
  for (;;) {
    Matrix p(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p(i, j) = random_rational(rng, 2, 2);
    if (!kmc::determinant(p).is_zero()) return p;
  }
}

/// Same Lie algebra in the basis e'_a = sum_i P(i, a) e_i.
inline LieFrame change_basis(const LieFrame& f, const Matrix& p) {
  const std::size_t d = f.dim();
  const Matrix p_inv = *kmc::inverse(p);
  std::vector<Rational> c(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const kmc::Vector br = p_inv * f.bracket(p.column(a), p.column(b));
      for (std::size_t k = 0; k < d; ++k) c[(a * d + b) * d + k] = br[k];
    }
  return LieFrame(d, std::move(c));
}

/// A^T A + I, positive definite with small rational entries.
inline Matrix random_metric(std::mt19937& rng, std::size_t d) {
  Matrix a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = random_rational(rng, 2, 2);
  return a.transpose() * a + Matrix::identity(d);
}

/// Jacobi-valid 3-dimensional frame: a unimodular or semidirect algebra in
/// a random rational basis.
inline LieFrame random_frame3(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  const LieFrame base = coin(rng) ? milnor_frame(random_rational(rng), random_rational(rng), random_rational(rng))
                                  : semidirect_frame(random_rational(rng), random_rational(rng),
                                                     random_rational(rng), random_rational(rng));
  return coin(rng) ? change_basis(base, random_invertible(rng, 3)) : base;
}

inline MetricFrame random_metric_frame3(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  LieFrame f = random_frame3(rng);
  return coin(rng) ? MetricFrame::orthonormal(std::move(f)) : MetricFrame(std::move(f), random_metric(rng, 3));
}

/// Family member (2, c2, c3) with c2, c3 drawn from small rationals.
inline std::pair<Rational, Rational> random_family_pair(std::mt19937& rng) {
  return {random_rational(rng, 5, 2), random_rational(rng, 5, 2)};
}

struct Geometry {
  MetricFrame metric;
  kmc::Tensor gamma, r, ricci;
};

inline Geometry geometry(const MetricFrame& m) {
  Geometry g{m, kmc::levi_civita_connection(m), {}, {}};
  g.r = kmc::riemann_curvature(m, g.gamma);
  g.ricci = kmc::ricci_tensor(m, g.r);
  return g;
}

}  // namespace kmc_test
