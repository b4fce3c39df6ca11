#pragma once

#include <kmc/curvature.hpp>
#include <kmc/lie_frame.hpp>
#include <kmc/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kmc {

/// Contact metric structure (phi, xi, eta, g) on an invariant frame.
/// Endomorphisms are matrices whose column b is the image of e_b.
///
/// Instances returned by build_contact_structure and
/// validate_contact_structure satisfy every contact metric axiom; the
/// fields are public so tests can deliberately break them.
struct ContactMetricStructure {
  MetricFrame metric;
  Vector xi;
  Vector eta;
  Matrix phi;
  Matrix h;

  std::size_t dim() const { return metric.dim(); }
  std::size_t n() const { return metric.frame().half_dim(); }

  Rational eta_of(const Vector& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += eta[i] * x[i];
    return s;
  }
};

struct EigenDistributions {
  Rational lambda;
  std::vector<Vector> basis_zero;
  std::vector<Vector> basis_plus;
  std::vector<Vector> basis_minus;
};

/// g-orthogonal (not normalised) basis of the span of `vectors`.
inline std::vector<Vector> gram_schmidt(const MetricFrame& m, const std::vector<Vector>& vectors) {
  std::vector<Vector> out;
  for (const auto& v : vectors) {
    Vector u = v;
    for (const auto& w : out) u = u - (m.inner(v, w) / m.inner(w, w)) * w;
    if (!is_zero(u)) out.push_back(std::move(u));
  }
  return out;
}

/// d eta(e_a, e_b) = (1/2)(e_a eta(e_b) - e_b eta(e_a) - eta([e_a, e_b])),
/// which for invariant eta is -(1/2) eta([e_a, e_b]).
inline Matrix exterior_derivative(const LieFrame& frame, const Vector& eta) {
  const std::size_t d = frame.dim();
  Matrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Rational s = 0;
      for (std::size_t k = 0; k < d; ++k) s += eta[k] * frame.constant(a, b, k);
      out(a, b) = -s / 2;
    }
  return out;
}

/// h = (1/2) L_xi phi, i.e. h X = (1/2)([xi, phi X] - phi [xi, X]).
inline Matrix compute_h(const ContactMetricStructure& s) {
  const std::size_t d = s.dim();
  const auto& frame = s.metric.frame();
  std::vector<Vector> cols;
  for (std::size_t b = 0; b < d; ++b) {
    const Vector eb = basis_vector(d, b);
    const Vector lie = frame.bracket(s.xi, s.phi * eb) - s.phi * frame.bracket(s.xi, eb);
    cols.push_back(Rational(1, 2) * lie);
  }
  return Matrix::from_columns(cols, d);
}

/// First failing contact metric axiom, if any.
inline std::optional<std::string> contact_axiom_violation(const ContactMetricStructure& s) {
  const std::size_t d = s.dim();
  const auto& g = s.metric.metric();
  if (s.eta_of(s.xi) != 1) return "eta(xi) != 1";
  for (std::size_t a = 0; a < d; ++a)
    if (s.eta[a] != s.metric.inner(basis_vector(d, a), s.xi)) return "eta(X) != g(X, xi)";

  const Matrix d_eta = exterior_derivative(s.metric.frame(), s.eta);
  if (!is_zero(d_eta * s.xi)) return "xi is not in the kernel of d eta";
  if (rank(d_eta) != 2 * s.n()) return "eta ^ (d eta)^n = 0";
  if (!(g * s.phi == d_eta)) return "d eta(X, Y) != g(X, phi Y)";

  Matrix expected = Rational(-1) * Matrix::identity(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) expected(a, b) += s.xi[a] * s.eta[b];
  if (!(s.phi * s.phi == expected)) return "phi^2 != -I + eta (x) xi";

  if (!(g * s.h).is_symmetric()) return "h is not g-symmetric";
  if (!is_zero(s.h * s.xi)) return "h xi != 0";
  return std::nullopt;
}

/// Validation-only entry path for a caller-supplied phi.
inline ContactMetricStructure validate_contact_structure(const MetricFrame& m, const Vector& xi, const Vector& eta,
                                                         const Matrix& phi) {
  if (xi.size() != m.dim() || eta.size() != m.dim() || phi.rows() != m.dim() || !phi.square())
    throw Error(ErrorCode::DimensionMismatch, "contact structure components");
  ContactMetricStructure s{m, xi, eta, phi, Matrix(m.dim(), m.dim())};
  s.h = compute_h(s);
  if (auto bad = contact_axiom_violation(s)) throw Error(ErrorCode::ContactAxiomViolation, *bad);
  return s;
}

/// Builds the contact metric structure with Reeb field xi = e_{xi_index}
/// (0-based): eta = g(., xi), and phi solved from d eta(X, Y) = g(X, phi Y).
inline ContactMetricStructure build_contact_structure(const MetricFrame& m, std::size_t xi_index) {
  const std::size_t d = m.dim();
  if (xi_index >= d) throw Error(ErrorCode::IndexOutOfRange, "xi index " + std::to_string(xi_index + 1));
  const Vector xi = basis_vector(d, xi_index);
  if (m.norm_squared(xi) != 1) throw Error(ErrorCode::ContactAxiomViolation, "xi is not a unit vector");
  const Vector eta = m.metric() * xi;
  const Matrix d_eta = exterior_derivative(m.frame(), eta);
  if (rank(d_eta) != 2 * m.frame().half_dim()) throw Error(ErrorCode::ContactAxiomViolation, "eta ^ (d eta)^n = 0");
  const Matrix phi = m.inverse_metric() * d_eta;
  return validate_contact_structure(m, xi, eta, phi);
}

/// Residual of nabla_X xi = -phi X - phi h X; column b is the defect at X = e_b.
inline Matrix verify_nabla_xi(const ContactMetricStructure& s, const Tensor& gamma) {
  const std::size_t d = s.dim();
  std::vector<Vector> cols;
  for (std::size_t b = 0; b < d; ++b) {
    const Vector eb = basis_vector(d, b);
    cols.push_back(covariant_derivative(gamma, eb, s.xi) + s.phi * eb + s.phi * (s.h * eb));
  }
  return Matrix::from_columns(cols, d);
}

/// (nabla_X phi) Y = g(X, Y) xi - eta(Y) X on all frame pairs.
inline bool is_sasakian(const ContactMetricStructure& s, const Tensor& gamma) {
  const std::size_t d = s.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vector ea = basis_vector(d, a);
      const Vector eb = basis_vector(d, b);
      const Vector lhs = covariant_derivative(gamma, ea, s.phi * eb) - s.phi * covariant_derivative(gamma, ea, eb);
      const Vector rhs = s.metric.inner(ea, eb) * s.xi - s.eta_of(eb) * ea;
      if (lhs != rhs) return false;
    }
  return true;
}

/// Eigen-distributions D(0), D(lambda), D(-lambda) of h.
///
/// Requires h^2 = lambda^2 (I - eta (x) xi), which every (kappa, mu)
/// structure satisfies. lambda must be rational; otherwise
/// Error(IrrationalEigenvalue) is raised with lambda^2 in the message.
inline EigenDistributions h_eigenstructure(const ContactMetricStructure& s) {
  const std::size_t d = s.dim();
  EigenDistributions out;
  if (s.h.is_zero()) {
    out.lambda = 0;
    std::vector<Vector> all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(basis_vector(d, i));
    out.basis_zero = gram_schmidt(s.metric, all);
    return out;
  }
  const Matrix h2 = s.h * s.h;
  Matrix complement = Matrix::identity(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) complement(a, b) -= s.xi[a] * s.eta[b];

  // read lambda^2 off the first nonzero entry of the projector
  std::optional<Rational> lambda_sq;
  for (std::size_t a = 0; a < d && !lambda_sq; ++a)
    for (std::size_t b = 0; b < d && !lambda_sq; ++b)
      if (!complement(a, b).is_zero()) lambda_sq = h2(a, b) / complement(a, b);
  if (!lambda_sq || !(h2 == *lambda_sq * complement))
    throw Error(ErrorCode::PreconditionViolation, "h^2 is not a multiple of -phi^2");

  const auto lambda = exact_sqrt(*lambda_sq);
  if (!lambda) throw Error(ErrorCode::IrrationalEigenvalue, "lambda^2 = " + lambda_sq->str() + " is not a rational square");
  out.lambda = *lambda;
  const Matrix id = Matrix::identity(d);
  out.basis_zero = gram_schmidt(s.metric, nullspace(s.h));
  out.basis_plus = gram_schmidt(s.metric, nullspace(s.h - out.lambda * id));
  out.basis_minus = gram_schmidt(s.metric, nullspace(s.h + out.lambda * id));
  if (out.basis_plus.size() != s.n() || out.basis_minus.size() != s.n())
    throw Error(ErrorCode::PreconditionViolation, "eigenspaces of h do not have dimension n");
  return out;
}

}  // namespace kmc
