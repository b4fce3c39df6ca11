#include <kmc/rational.hpp>

#include <gtest/gtest.h>

#include <random>

using kmc::ArithOp;
using kmc::Error;
using kmc::ErrorCode;
using kmc::Rational;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected kmc::Error";
  return ErrorCode::ParseError;
}

Rational random_rational(std::mt19937& rng, int bound = 40) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, ParsesSignedFractions) {
  EXPECT_EQ(Rational::parse("-5/2"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse(" 4 / 8 "), Rational(1, 2));
}

TEST(Rational, AcceptsUnicodeMinus) { EXPECT_EQ(Rational::parse("\xE2\x88\x92" "5/2"), Rational(-5, 2)); }

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1.5", "a/b", "1/2/3", "--1", "1/-2", "0x10"})
    EXPECT_EQ(code_of([&] { (void)Rational::parse(bad); }), ErrorCode::MalformedRational) << bad;
}

TEST(Rational, ZeroDenominatorIsTyped) {
  EXPECT_EQ(code_of([] { (void)Rational::parse("1/0"); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)Rational(1, 0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)(Rational(3) / Rational(0)); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)kmc::apply(ArithOp::Div, 1, 0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)Rational(0).inverse(); }), ErrorCode::DivisionByZero);
}

TEST(Rational, NormalFormHasPositiveDenominator) {
  const Rational r(3, -6);
  EXPECT_EQ(r.numerator(), -1);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(-4, 6).inverse(), Rational(-3, 2));
  EXPECT_EQ(Rational(-4, 6).inverse().denominator(), 2);
}

TEST(Rational, Rendering) {
  EXPECT_EQ(Rational(-5, 2).str(), "-5/2");
  EXPECT_EQ(Rational(4).str(), "4");
  EXPECT_EQ(Rational(4).fraction_str(), "4/1");
  EXPECT_EQ(Rational(0).fraction_str(), "0/1");
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(kmc::exact_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_EQ(kmc::exact_sqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(kmc::exact_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(kmc::exact_sqrt(Rational(-4)).has_value());
  EXPECT_FALSE(kmc::exact_sqrt(Rational(4, 3)).has_value());
}

TEST(Rational, LargeValuesStayExact) {
  Rational x = 1;
  for (int i = 0; i < 40; ++i) x *= Rational(1000003, 999983);
  for (int i = 0; i < 40; ++i) x /= Rational(1000003, 999983);
  EXPECT_EQ(x, Rational(1));
  EXPECT_EQ(kmc::pow(Rational(2, 3), 5), Rational(32, 243));
}

// field axioms and rendering round-trip on random samples

TEST(RationalProperty, FieldAxioms) {
  std::mt19937 rng(20241016);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
      EXPECT_EQ(b * b.inverse(), Rational(1));
    }
    EXPECT_EQ(a < b, (b - a).sign() > 0);
  }
}

TEST(RationalProperty, RenderedFormReparsesIdentically) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational(rng, 100000);
    EXPECT_EQ(Rational::parse(a.fraction_str()), a);
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}

TEST(RationalProperty, SquaresHaveExactRoots) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng, 1000).abs();
    EXPECT_EQ(kmc::exact_sqrt(a * a), a);
  }
}
