#pragma once

#include <kmc/linalg.hpp>
#include <kmc/rational.hpp>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace kmc {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({0, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  /// Horner evaluation.
  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const Rational inv = leading().inverse();
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x *= inv;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return Polynomial(std::move(c));
  }

  Polynomial operator-() const { return Polynomial() - *this; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) { return Polynomial::constant(s) * p; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division: returns (quotient, remainder) with deg r < deg d.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d) {
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> rem = n.coeffs_;
    if (n.degree() < d.degree()) return {Polynomial(), n};
    std::vector<Rational> quo(n.coeffs_.size() - d.coeffs_.size() + 1);
    const Rational lead_inv = d.leading().inverse();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Rational f = rem[k + d.coeffs_.size() - 1] * lead_inv;
      quo[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[k + j] -= f * d.coeffs_[j];
    }
    rem.resize(d.coeffs_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      std::string term;
      const Rational mag = c.abs();
      if (k == 0 || mag != 1) term += mag.str();
      if (k >= 1) term += var;
      if (k >= 2) term += "^" + std::to_string(k);
      if (out.empty()) {
        out = (c.sign() < 0 ? "-" : "") + term;
      } else {
        out += (c.sign() < 0 ? " - " : " + ") + term;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p divided by gcd(p, p'); same distinct roots, all simple.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  const Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

/// Canonical Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k).
inline std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  std::vector<Polynomial> seq{p};
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    next = -divmod(seq[seq.size() - 2], seq.back()).second;
  }
  return seq;
}

/// An interval endpoint; nullopt stands for the infinity on that side.
using Bound = std::optional<Rational>;

namespace detail {

inline int sign_at(const Polynomial& p, const Bound& x, bool at_plus_infinity) {
  if (x) return p(*x).sign();
  if (p.is_zero()) return 0;
  const int lead = p.leading().sign();
  if (at_plus_infinity || p.degree() % 2 == 0) return lead;
  return -lead;
}

inline int sign_variations(const std::vector<Polynomial>& seq, const Bound& x, bool at_plus_infinity) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, x, at_plus_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Number of distinct real roots of p in the open interval (lo, hi).
///
/// Uses the Sturm chain of the square-free part. For a square-free
/// polynomial the variation count V(x), zeros dropped, is right-continuous
/// and drops by one across each root, so V(lo) - V(hi) counts roots in
/// (lo, hi]; a root at hi is then subtracted.
inline int real_roots_in_interval(const Polynomial& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  const Polynomial q = squarefree_part(p);
  if (q.degree() < 1) return 0;
  const auto seq = sturm_sequence(q);
  const int v_lo = detail::sign_variations(seq, lo, false);
  const int v_hi = detail::sign_variations(seq, hi, true);
  int count = v_lo - v_hi;
  if (hi && q(*hi).is_zero()) --count;
  return count;
}

inline int distinct_real_roots(const Polynomial& p) { return real_roots_in_interval(p, std::nullopt, std::nullopt); }

/// Resultant via the Sylvester matrix; zero iff p and q share a complex root
/// (given nonzero leading coefficients).
inline Rational resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0 && n == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  Matrix s(size, size);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s(row, row + k) = p.coefficient(static_cast<std::size_t>(m - k));
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s(n + row, row + k) = q.coefficient(static_cast<std::size_t>(n - k));
  return determinant(std::move(s));
}

}  // namespace kmc
