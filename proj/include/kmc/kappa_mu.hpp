#pragma once

#include <kmc/contact.hpp>
#include <kmc/curvature.hpp>
#include <kmc/polynomial.hpp>
#include <kmc/pseudosymmetry.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kmc {

/// Parameters of a contact metric manifold whose Reeb field lies in the
/// (kappa, mu)-nullity distribution, dim = 2n + 1.
struct KappaMuParameters {
  std::size_t n = 1;
  Rational kappa;
  Rational mu;
  Rational lambda_squared;        // 1 - kappa
  std::optional<Rational> lambda;  // sqrt(1 - kappa) when rational
  /// h = 0 makes the mu-term of the nullity condition vanish; mu is then
  /// reported as 0.
  bool mu_indeterminate = false;
};

/// Fits R(X,Y)xi = kappa (eta(Y)X - eta(X)Y) + mu (eta(Y)hX - eta(X)hY)
/// exactly over all frame pairs. Raises Error(NotKappaMu) when no pair
/// (kappa, mu) makes the residual vanish.
inline KappaMuParameters detect_kappa_mu(const ContactMetricStructure& s, const Tensor& r) {
  const std::size_t d = s.dim();
  Matrix a(d * d * d, 2);
  Vector b(d * d * d);
  std::size_t row = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector rxi = apply_curvature(r, basis_vector(d, i), basis_vector(d, j), s.xi);
      for (std::size_t l = 0; l < d; ++l, ++row) {
        a(row, 0) = s.eta[j] * Rational(l == i ? 1 : 0) - s.eta[i] * Rational(l == j ? 1 : 0);
        a(row, 1) = s.eta[j] * s.h(l, i) - s.eta[i] * s.h(l, j);
        b[row] = rxi[l];
      }
    }
  const auto sol = solve(a, b);
  if (!sol.consistent) throw Error(ErrorCode::NotKappaMu, "no (kappa, mu) satisfies R(X,Y)xi on every frame pair");
  KappaMuParameters p;
  p.n = s.n();
  p.kappa = sol.solution[0];
  p.mu = sol.solution[1];
  for (auto f : sol.free_variables) {
    if (f == 1) p.mu_indeterminate = true;
  }
  p.lambda_squared = 1 - p.kappa;
  p.lambda = exact_sqrt(p.lambda_squared);
  return p;
}

/// (1-2n) kappa mu - n mu^2 + 2(n-1)(kappa + mu); zero exactly on the
/// Ricci-generalized pseudosymmetric (kappa, mu) parameters.
inline Rational classification_residual(std::size_t n, const Rational& kappa, const Rational& mu) {
  const Rational nn = static_cast<long long>(n);
  return (1 - 2 * nn) * kappa * mu - nn * mu * mu + 2 * (nn - 1) * (kappa + mu);
}

/// Residuals (lhs - rhs) of the three coefficient equations obtained by
/// comparing g(X,X), g(hX,X) and eta(X)^2 terms.
inline std::array<Rational, 3> prop52_system_residuals(std::size_t n, const Rational& kappa, const Rational& mu) {
  const Rational nn = static_cast<long long>(n);
  const Rational r1 = kappa * (2 * (1 - nn) + nn * (2 * kappa + mu)) + mu * (kappa - 1) * (2 * (nn - 1) + mu);
  const Rational r2 = kappa * (2 * (nn - 1) + mu) + mu * (2 * (nn - 1) - nn * mu) - 2 * nn * kappa * mu;
  const Rational r3 = kappa * (2 * (nn - 1) - nn * mu) - mu * (kappa - 1) * (2 * (nn - 1) + mu) - 2 * nn * kappa * kappa;
  return {r1, r2, r3};
}

/// Subtracting the third equation from the second and eliminating against
/// the first: r2 - r3 - r1 reproduces classification_residual identically.
inline Rational prop52_combination(const std::array<Rational, 3>& r) { return r[1] - r[2] - r[0]; }

struct RgpsSolution {
  Rational kappa;
  Rational mu;
  Rational L;
};

/// The two non-Sasakian parameter families for n >= 2.
inline std::array<RgpsSolution, 2> theorem56_solutions(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::OutOfTheoremRange, "solution families need n >= 2, got " + std::to_string(n));
  const Rational nn = static_cast<long long>(n);
  return {RgpsSolution{0, (2 * nn - 2) / nn, Rational(1) / (nn + 1)},
          RgpsSolution{Rational(-2) / nn, 2, Rational(1) / nn}};
}

/// mu - 2(n-1)L / (1-L).
inline Rational mu_L_relation_residual(std::size_t n, const Rational& mu, const Rational& L) {
  const Rational nn = static_cast<long long>(n);
  return mu - 2 * (nn - 1) * L / (1 - L);
}

struct BranchConstants {
  Rational A;
  Rational B;
};

inline BranchConstants branch_constants(std::size_t n, const Rational& lambda, const Rational& mu, const Rational& L) {
  const Rational two_n1 = 2 * (Rational(static_cast<long long>(n)) - 1);
  const Rational nmu = Rational(static_cast<long long>(n)) * mu;
  return {-lambda * mu + L * (two_n1 - nmu + lambda * (two_n1 + mu)),
          lambda * mu + L * (two_n1 - nmu - lambda * (two_n1 + mu))};
}

// ---------------------------------------------------------------------------
// identity suite

enum class CheckStatus { Certified, Failed, NotApplicable };

constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Certified: return "certified";
    case CheckStatus::Failed: return "failed";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

struct IdentityResidual {
  std::string name;
  Rational max_residual;
  CheckStatus status = CheckStatus::Certified;
  std::string note;
};

struct IdentitySuite {
  std::vector<IdentityResidual> entries;
  /// mu used for the Ricci identities. Equals the fitted mu, except when mu
  /// is indeterminate and a unique value makes S match the closed form.
  std::optional<Rational> ricci_mu;

  bool all_certified() const {
    for (const auto& e : entries) {
      if (e.status == CheckStatus::Failed) return false;
    }
    return true;
  }

  const IdentityResidual* find(std::string_view name) const {
    for (const auto& e : entries) {
      if (e.name == name) return &e;
    }
    return nullptr;
  }
};

namespace detail {

inline IdentityResidual residual_entry(std::string name, const Matrix& residual) {
  IdentityResidual e{std::move(name), residual.max_abs(), CheckStatus::Certified, {}};
  if (!e.max_residual.is_zero()) e.status = CheckStatus::Failed;
  return e;
}

/// Residual matrix of S(X,Y) against the closed Ricci form for a given mu.
inline Matrix ricci_form_residual(const ContactMetricStructure& s, const Tensor& ricci, const Rational& kappa,
                                  const Rational& mu) {
  const std::size_t d = s.dim();
  const Rational nn = static_cast<long long>(s.n());
  const Matrix& g = s.metric.metric();
  const Matrix gh = g * s.h;  // gh(a, b) = g(e_a, h e_b) = g(h e_a, e_b)
  const Rational cg = 2 * (nn - 1) - nn * mu;
  const Rational ch = 2 * (nn - 1) + mu;
  const Rational ce = 2 * (1 - nn) + nn * (2 * kappa + mu);
  Matrix res(d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      res(x, y) = ricci(x, y) - cg * g(x, y) - ch * gh(x, y) - ce * s.eta[x] * s.eta[y];
  return res;
}

inline Matrix ricci_h_residual(const ContactMetricStructure& s, const Tensor& ricci, const Rational& kappa,
                               const Rational& mu) {
  const std::size_t d = s.dim();
  const Rational nn = static_cast<long long>(s.n());
  const Matrix& g = s.metric.metric();
  const Matrix gh = g * s.h;
  const Rational cg = 2 * (nn - 1) - nn * mu;
  const Rational c1 = (kappa - 1) * (2 * (nn - 1) + mu);
  Matrix res(d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Rational shxy = 0;
      for (std::size_t m = 0; m < d; ++m) shxy += s.h(m, x) * ricci(m, y);
      res(x, y) = shxy - cg * gh(x, y) + c1 * g(x, y) - c1 * s.eta[x] * s.eta[y];
    }
  return res;
}

}  // namespace detail

/// Residuals of the standard (kappa, mu) identities:
///   S(X, xi) = 2n kappa eta(X)
///   h^2 = (kappa - 1) phi^2
///   R(xi, X)Y = kappa (g(X,Y)xi - eta(Y)X) + mu (g(hX,Y)xi - eta(Y)hX)
///   S(X, Y)  = [2(n-1) - n mu] g(X,Y) + [2(n-1) + mu] g(hX,Y) + [2(1-n) + n(2 kappa + mu)] eta(X)eta(Y)
///   S(hX, Y) = [2(n-1) - n mu] g(hX,Y) - (kappa-1)[2(n-1) + mu] (g(X,Y) - eta(X)eta(Y))
inline IdentitySuite verify_ricci_identities(const ContactMetricStructure& s, const Tensor& r, const Tensor& ricci,
                                             const KappaMuParameters& p) {
  const std::size_t d = s.dim();
  const Rational nn = static_cast<long long>(s.n());
  const Matrix& g = s.metric.metric();
  IdentitySuite suite;

  {
    Matrix res(d, 1);
    for (std::size_t x = 0; x < d; ++x) {
      Rational sx = 0;
      for (std::size_t k = 0; k < d; ++k) sx += ricci(x, k) * s.xi[k];
      res(x, 0) = sx - 2 * nn * p.kappa * s.eta[x];
    }
    suite.entries.push_back(detail::residual_entry("S(X,xi)=2n.kappa.eta(X)", res));
  }

  suite.entries.push_back(detail::residual_entry("h^2=(kappa-1)phi^2", s.h * s.h - (p.kappa - 1) * (s.phi * s.phi)));

  {
    Matrix res(d * d, d);
    const Matrix hm = s.h;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        const Vector ex = basis_vector(d, x);
        const Vector ey = basis_vector(d, y);
        const Vector lhs = apply_curvature(r, s.xi, ex, ey);
        const Vector hx = hm * ex;
        const Vector rhs = p.kappa * (g(x, y) * s.xi - s.eta[y] * ex) +
                           p.mu * (s.metric.inner(hx, ey) * s.xi - s.eta[y] * hx);
        const Vector diff = lhs - rhs;
        for (std::size_t l = 0; l < d; ++l) res(x * d + y, l) = diff[l];
      }
    suite.entries.push_back(detail::residual_entry("R(xi,X)Y", res));
  }

  std::optional<Rational> ricci_mu = p.mu;
  std::string ricci_note;
  if (p.mu_indeterminate) {
    // Residual is affine in mu: r(mu) = r(0) + mu (r(1) - r(0)).
    const Matrix r0 = detail::ricci_form_residual(s, ricci, p.kappa, 0);
    const Matrix slope = detail::ricci_form_residual(s, ricci, p.kappa, 1) - r0;
    const auto fit = proportionality_fit(Tensor::from_matrix(Rational(-1) * r0, 0), Tensor::from_matrix(slope, 0));
    if (fit.kind == Proportionality::Kind::Proportional) {
      ricci_mu = *fit.factor;
      ricci_note = "mu is free for h = 0; the Ricci form fixes mu = " + fit.factor->str();
    } else if (fit.kind == Proportionality::Kind::BothZero) {
      ricci_mu = Rational(0);
    } else {
      ricci_mu.reset();
    }
  }
  suite.ricci_mu = ricci_mu;

  if (ricci_mu) {
    auto e15 = detail::residual_entry("S(X,Y)", detail::ricci_form_residual(s, ricci, p.kappa, *ricci_mu));
    e15.note = ricci_note;
    suite.entries.push_back(std::move(e15));
    suite.entries.push_back(
        detail::residual_entry("S(hX,Y)", detail::ricci_h_residual(s, ricci, p.kappa, *ricci_mu)));
  } else {
    const Rational at_zero = detail::ricci_form_residual(s, ricci, p.kappa, 0).max_abs();
    suite.entries.push_back({"S(X,Y)", at_zero, CheckStatus::NotApplicable,
                             "h = 0 and no mu reproduces S; the closed Ricci form needs kappa < 1"});
    suite.entries.push_back({"S(hX,Y)", detail::ricci_h_residual(s, ricci, p.kappa, 0).max_abs(),
                             CheckStatus::NotApplicable, "h = 0"});
  }
  return suite;
}

// ---------------------------------------------------------------------------
// sectional curvature spectrum

struct SpectrumEntry {
  std::string case_name;  // "xi,D(+)", "xi,D(-)", "D(+),D(+)", "D(-),D(-)", "D(+),D(-)"
  Vector x;
  Vector y;
  Rational value;
  Rational expected;
  Rational residual() const { return value - expected; }
};

/// Checks the sectional curvatures predicted for kappa < 1 on the
/// eigenbases of h. Cases inside D(lambda) or D(-lambda) need n > 1 and
/// are skipped in dimension three. Returns no entries when lambda = 0.
inline std::vector<SpectrumEntry> sectional_spectrum_check(const ContactMetricStructure& s, const Tensor& r,
                                                           const KappaMuParameters& p, const EigenDistributions& eig) {
  std::vector<SpectrumEntry> out;
  if (eig.lambda.is_zero()) return out;
  const auto& m = s.metric;
  const Rational& lambda = eig.lambda;
  for (const auto& x : eig.basis_plus)
    out.push_back({"xi,D(+)", x, s.xi, sectional_curvature(m, r, x, s.xi), p.kappa + lambda * p.mu});
  for (const auto& x : eig.basis_minus)
    out.push_back({"xi,D(-)", x, s.xi, sectional_curvature(m, r, x, s.xi), p.kappa - lambda * p.mu});
  if (s.n() > 1) {
    for (std::size_t i = 0; i < eig.basis_plus.size(); ++i)
      for (std::size_t j = i + 1; j < eig.basis_plus.size(); ++j) {
        const auto& x = eig.basis_plus[i];
        const auto& y = eig.basis_plus[j];
        out.push_back({"D(+),D(+)", x, y, sectional_curvature(m, r, x, y), 2 * (1 + lambda) - p.mu});
      }
    for (std::size_t i = 0; i < eig.basis_minus.size(); ++i)
      for (std::size_t j = i + 1; j < eig.basis_minus.size(); ++j) {
        const auto& x = eig.basis_minus[i];
        const auto& y = eig.basis_minus[j];
        out.push_back({"D(-),D(-)", x, y, sectional_curvature(m, r, x, y), 2 * (1 - lambda) - p.mu});
      }
  }
  for (const auto& x : eig.basis_plus)
    for (const auto& y : eig.basis_minus) {
      // -(kappa + mu) g(X, phi Y)^2 for unit vectors, written scale-free
      const Rational gxphiy = m.inner(x, s.phi * y);
      const Rational expected = -(p.kappa + p.mu) * gxphiy * gxphiy / (m.norm_squared(x) * m.norm_squared(y));
      out.push_back({"D(+),D(-)", x, y, sectional_curvature(m, r, x, y), expected});
    }
  return out;
}

/// Same check with the eigenbases extracted from h. Raises
/// Error(IrrationalEigenvalue) when lambda is irrational.
inline std::vector<SpectrumEntry> sectional_spectrum_check(const ContactMetricStructure& s, const Tensor& r,
                                                           const KappaMuParameters& p) {
  return sectional_spectrum_check(s, r, p, h_eigenstructure(s));
}

// ---------------------------------------------------------------------------
// Ricci-generalized pseudosymmetry at the level of sectional data

/// LHS - L * RHS of
///   kappa g(X, R(X,Y)Y) + mu g(hX, R(X,Y)Y) - [kappa + mu g(hX,X)][kappa + mu g(hY,Y)] + mu^2 g(hX,Y)^2
///   = L { S(X, R(X,Y)Y) - kappa S(X,X) - mu S(X,X) g(hY,Y) + mu S(X,Y) g(hX,Y) }
/// for X, Y orthogonal to each other and to xi. Each term is made
/// homogeneous of degree (2, 2) in (X, Y) by multiplying with g(X,X) or
/// g(Y,Y), so unit vectors are not required; for unit vectors this is the
/// identity as written.
inline Rational rgps_residual(const ContactMetricStructure& s, const Tensor& r, const Tensor& ricci,
                              const KappaMuParameters& p, const Rational& L, const Vector& x, const Vector& y) {
  const auto& m = s.metric;
  if (x.size() != s.dim() || y.size() != s.dim()) throw Error(ErrorCode::DimensionMismatch, "pair operands");
  if (is_zero(x) || is_zero(y)) throw Error(ErrorCode::PreconditionViolation, "X and Y must be nonzero");
  if (!m.inner(x, y).is_zero()) throw Error(ErrorCode::PreconditionViolation, "X and Y must be orthogonal");
  if (!s.eta_of(x).is_zero() || !s.eta_of(y).is_zero())
    throw Error(ErrorCode::PreconditionViolation, "X and Y must be orthogonal to xi");

  const Rational xx = m.norm_squared(x);
  const Rational yy = m.norm_squared(y);
  const Vector hx = s.h * x;
  const Vector hy = s.h * y;
  const Vector rxyy = apply_curvature(r, x, y, y);
  const Rational hxy = m.inner(hx, y);
  const Rational sxx = bilinear(ricci, x, x);

  const Rational lhs = p.kappa * m.inner(x, rxyy) + p.mu * m.inner(hx, rxyy) -
                       (p.kappa * xx + p.mu * m.inner(hx, x)) * (p.kappa * yy + p.mu * m.inner(hy, y)) +
                       p.mu * p.mu * hxy * hxy;
  const Rational rhs = bilinear(ricci, x, rxyy) - p.kappa * sxx * yy - p.mu * sxx * m.inner(hy, y) +
                       p.mu * bilinear(ricci, x, y) * hxy;
  return lhs - L * rhs;
}

/// Orthogonal pairs spanning planes normal to xi, built from an orthogonal
/// basis of xi-perp (eigenvectors of h first, when available) and small
/// rational rotations inside each coordinate plane of that basis.
inline std::vector<std::pair<Vector, Vector>> admissible_pairs(const ContactMetricStructure& s,
                                                               const EigenDistributions* eig) {
  const std::size_t d = s.dim();
  std::vector<Vector> seed{s.xi};
  if (eig) {
    seed.insert(seed.end(), eig->basis_plus.begin(), eig->basis_plus.end());
    seed.insert(seed.end(), eig->basis_minus.begin(), eig->basis_minus.end());
  }
  for (std::size_t i = 0; i < d; ++i) seed.push_back(basis_vector(d, i));
  auto basis = gram_schmidt(s.metric, seed);
  basis.erase(basis.begin());

  static const std::array<std::pair<Rational, Rational>, 8> coeffs{{
      {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {Rational(1, 2), 3}, {-3, Rational(2, 3)},
  }};
  std::vector<std::pair<Vector, Vector>> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& u = basis[i];
      const auto& v = basis[j];
      const Rational uu = s.metric.norm_squared(u);
      const Rational vv = s.metric.norm_squared(v);
      for (const auto& [a, b] : coeffs) {
        Vector x = a * u + b * v;
        Vector y = (-b * vv) * u + (a * uu) * v;
        out.emplace_back(std::move(x), std::move(y));
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// three-dimensional classification

struct Corollary11Verdict {
  bool sasakian = false;
  bool constant_curvature_one = false;
  bool kappa_equals_minus_mu = false;
  bool predicted_rgps = false;
  bool operator_rgps = false;
  bool agree() const { return predicted_rgps == operator_rgps; }
};

/// Parameter-level prediction for dimension three (RGPS iff Sasakian of
/// constant curvature 1 or kappa = -mu), set against the operator-level
/// test in `symmetry`. When mu is indeterminate (h = 0) the kappa = -mu
/// clause is not used.
inline Corollary11Verdict corollary11_check(const ContactMetricStructure& s, const Tensor& r,
                                            const KappaMuParameters& p, const SymmetryReport& symmetry) {
  if (s.dim() != 3) throw Error(ErrorCode::PreconditionViolation, "the three-dimensional classification needs dim = 3");
  Corollary11Verdict v;
  v.sasakian = s.h.is_zero();
  const auto k = constant_curvature(s.metric, r);
  v.constant_curvature_one = k && *k == 1;
  v.kappa_equals_minus_mu = !p.mu_indeterminate && p.kappa == -p.mu;
  v.predicted_rgps = (v.sasakian && v.constant_curvature_one) || v.kappa_equals_minus_mu;
  v.operator_rgps = symmetry.is_rgps();
  return v;
}

inline Corollary11Verdict corollary11_check(const ContactMetricStructure& s, const Tensor& r, const Tensor& ricci,
                                            const KappaMuParameters& p) {
  return corollary11_check(s, r, p, classify_symmetry(s.metric, r, ricci));
}

// ---------------------------------------------------------------------------
// branch audit

struct BranchAudit {
  std::size_t n = 2;

  // lambda^2 + (n+1) lambda + (5n-4): must have no positive root
  Polynomial system2_factor;
  Rational system2_discriminant;         // n^2 - 18n + 17
  int system2_positive_roots = 0;
  bool system2_inequality_impossible = false;  // -20n + 16 > 0 fails

  // (n^2+n) L^2 - (2n+1) L + 1: roots exactly 1/(n+1) and 1/n
  Polynomial l_quadratic;
  int l_real_roots = 0;
  std::array<Rational, 2> l_roots;
  bool l_roots_verified = false;

  // lambda^2 - (n+1) lambda + (5n-4), roots (n+1 +- sqrt(n^2-18n+17))/2
  Polynomial system3_quadratic;
  int system3_positive_roots = 0;

  // systems 12 and 24: quadratic in lambda versus the minimal polynomial of
  // (n-2 + sqrt(n^2+8))/2, resp. (2-n + sqrt(n^2+8))/2
  Polynomial system12_poly, system12_reeb;
  Polynomial system24_poly, system24_reeb;
  Rational system12_resultant, system24_resultant;

  // system 16 at lambda = 1: B = mu (1 - L(n+1)) vanishes on solution 1
  Rational lambda_one_b_residual;
  // kappa = A = B on both solution families (independent of lambda)
  std::array<Rational, 2> kappa_ab_residual;
  std::array<Rational, 2> mu_relation_residual;

  bool certified() const {
    return system2_positive_roots == 0 && system2_inequality_impossible && l_real_roots == 2 && l_roots_verified &&
           !system12_resultant.is_zero() && !system24_resultant.is_zero() && lambda_one_b_residual.is_zero() &&
           kappa_ab_residual[0].is_zero() && kappa_ab_residual[1].is_zero() && mu_relation_residual[0].is_zero() &&
           mu_relation_residual[1].is_zero();
  }
};

inline BranchAudit branch_audit(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::OutOfTheoremRange, "branch audit needs n >= 2, got " + std::to_string(n));
  const Rational nn = static_cast<long long>(n);
  BranchAudit a;
  a.n = n;

  a.system2_factor = Polynomial({5 * nn - 4, nn + 1, 1});
  a.system2_discriminant = nn * nn - 18 * nn + 17;
  a.system2_positive_roots = real_roots_in_interval(a.system2_factor, Rational(0), std::nullopt);
  a.system2_inequality_impossible = !(-20 * nn + 16 > 0);

  a.l_quadratic = Polynomial({1, -(2 * nn + 1), nn * nn + nn});
  a.l_real_roots = distinct_real_roots(a.l_quadratic);
  a.l_roots = {Rational(1) / (nn + 1), Rational(1) / nn};
  a.l_roots_verified = a.l_quadratic(a.l_roots[0]).is_zero() && a.l_quadratic(a.l_roots[1]).is_zero() &&
                       a.l_roots[0] != a.l_roots[1] &&
                       real_roots_in_interval(a.l_quadratic, Rational(0), Rational(1)) == 2;

  a.system3_quadratic = Polynomial({5 * nn - 4, -(nn + 1), 1});
  a.system3_positive_roots = real_roots_in_interval(a.system3_quadratic, Rational(0), std::nullopt);

  a.system12_poly = Polynomial({3 - nn, 2 - 3 * nn, 1 - 2 * nn});
  a.system12_reeb = Polynomial({-(nn + 1), -(nn - 2), 1});
  a.system24_poly = Polynomial({nn - 3, 2 - 3 * nn, 2 * nn - 1});
  a.system24_reeb = Polynomial({-(nn + 1), nn - 2, 1});
  a.system12_resultant = resultant(a.system12_poly, a.system12_reeb);
  a.system24_resultant = resultant(a.system24_poly, a.system24_reeb);

  const auto sols = theorem56_solutions(n);
  a.lambda_one_b_residual = branch_constants(n, 1, sols[0].mu, sols[0].L).B;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& s = sols[i];
    // (A + B)/2 = L(2(n-1) - n mu) does not involve lambda
    a.kappa_ab_residual[i] = s.L * (2 * (nn - 1) - nn * s.mu) - s.kappa;
    a.mu_relation_residual[i] = -s.mu + s.L * (2 * (nn - 1) + s.mu);
  }
  return a;
}

}  // namespace kmc
