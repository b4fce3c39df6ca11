#pragma once

#include <kmc/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kmc {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Values are always reduced with a positive denominator; the backing
/// boost rational maintains that normal form after every operation.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}                  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}                 // NOLINT(google-explicit-constructor)
  Rational(long long value) : value_(value) {}            // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}       // NOLINT(google-explicit-constructor)

  Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    // boost's rational adaptor rejects negative denominators, so move the sign up front
    value_ = denominator < 0 ? boost::multiprecision::cpp_rational(-numerator, -denominator)
                             : boost::multiprecision::cpp_rational(numerator, denominator);
  }

  /// Accepts "p", "p/q", "-p/q" and "+p/q" with decimal integers. The
  /// Unicode minus sign (U+2212) is accepted as well.
  static Rational parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      // U+2212 is E2 88 92 in UTF-8
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 &&
          static_cast<unsigned char>(text[i + 2]) == 0x92) {
        s.push_back('-');
        i += 2;
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(text[i]))) s.push_back(text[i]);
    }
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
      throw Error(ErrorCode::MalformedRational, "cannot parse '" + std::string(text) + "'");
    }
    const Integer d(den);
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    return Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(denominator(), numerator());
  }

  /// Compact rendering: "3", "-5/2".
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  /// Canonical "p/q" rendering used by machine-readable reports, even for integers.
  std::string fraction_str() const { return numerator().str() + "/" + denominator().str(); }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, str() + " / 0");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static bool is_integer_literal(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  }

  boost::multiprecision::cpp_rational value_{0};
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Single-entry arithmetic dispatch. Division by zero raises
/// Error(DivisionByZero); nothing here aborts the process.
inline Rational apply(ArithOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

/// Exact square root when both numerator and denominator are perfect squares.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const Integer n = x.numerator();
  const Integer d = x.denominator();
  const Integer rn = boost::multiprecision::sqrt(n);
  const Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

using Vector = std::vector<Rational>;

inline Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Rational& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

inline Vector operator-(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace kmc
