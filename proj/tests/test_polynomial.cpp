#include <kmc/polynomial.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using kmc::Polynomial;
using kmc::Rational;

namespace {

Polynomial linear(const Rational& root) { return Polynomial({-root, 1}); }

Polynomial from_roots(const Rational& lead, const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(lead);
  for (const auto& r : roots) p = p * linear(r);
  return p;
}

// brute-force oracle: distinct roots from the known factorisation
int count_in(const std::set<Rational>& roots, const kmc::Bound& lo, const kmc::Bound& hi) {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [&](const Rational& r) {
    return (!lo || r > *lo) && (!hi || r < *hi);
  }));
}

}  // namespace

TEST(Polynomial, EvaluationAndArithmetic) {
  const Polynomial p({1, -3, 0, 2});  // 2x^3 - 3x + 1
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p(Rational(1, 2)), Rational(1, 4) - Rational(3, 2) + 1);
  EXPECT_EQ(p.derivative(), Polynomial({-3, 0, 6}));
  EXPECT_EQ((p - p).degree(), -1);
  const auto [q, r] = divmod(p, linear(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * linear(1), p);
}

TEST(Polynomial, DivisionByZeroPolynomialThrows) {
  EXPECT_THROW((void)divmod(Polynomial({1, 1}), Polynomial()), kmc::Error);
}

TEST(Polynomial, GcdAndSquarefreePart) {
  const Polynomial p = from_roots(3, {1, 1, 2, Rational(-1, 2)});
  EXPECT_EQ(kmc::squarefree_part(p).monic(), from_roots(1, {1, 2, Rational(-1, 2)}));
  EXPECT_EQ(kmc::gcd(from_roots(1, {1, 2}), from_roots(5, {2, 3})), linear(2));
}

TEST(Polynomial, ZeroPolynomialHasNoSturmChain) {
  try {
    (void)kmc::sturm_sequence(Polynomial());
    FAIL();
  } catch (const kmc::Error& e) {
    EXPECT_EQ(e.code(), kmc::ErrorCode::ZeroPolynomial);
  }
  EXPECT_THROW((void)kmc::real_roots_in_interval(Polynomial(), 0, 1), kmc::Error);
}

TEST(Polynomial, RootCountsOnKnownCases) {
  // x^2 + 3x + 6: discriminant -15, no real roots
  EXPECT_EQ(kmc::distinct_real_roots(Polynomial({6, 3, 1})), 0);
  // (x - 1)^3 (x + 2): two distinct roots
  EXPECT_EQ(kmc::distinct_real_roots(from_roots(1, {1, 1, 1, -2})), 2);
  // endpoints are excluded
  const Polynomial p = from_roots(1, {0, 1});
  EXPECT_EQ(kmc::real_roots_in_interval(p, Rational(0), Rational(1)), 0);
  EXPECT_EQ(kmc::real_roots_in_interval(p, Rational(-1), Rational(1)), 1);
  EXPECT_EQ(kmc::real_roots_in_interval(p, Rational(0), std::nullopt), 1);
  EXPECT_EQ(kmc::real_roots_in_interval(p, std::nullopt, Rational(0)), 0);
  // x^2 - 2 has irrational roots in (1, 2) and (-2, -1)
  EXPECT_EQ(kmc::real_roots_in_interval(Polynomial({-2, 0, 1}), Rational(1), Rational(2)), 1);
  EXPECT_EQ(kmc::real_roots_in_interval(Polynomial({-2, 0, 1}), Rational(0), std::nullopt), 1);
  EXPECT_EQ(kmc::real_roots_in_interval(Polynomial({5}), std::nullopt, std::nullopt), 0);
}

TEST(Polynomial, ResultantOfSharedRootVanishes) {
  EXPECT_EQ(kmc::resultant(from_roots(1, {1, 2}), from_roots(3, {2, 5})), Rational(0));
  // Res(x - a, x - b) = a - b
  EXPECT_EQ(kmc::resultant(linear(3), linear(5)), Rational(3 - 5));
}

// Sturm counts against the brute-force oracle on random factorised inputs,
// including repeated roots, endpoint hits and non-real quadratic factors.
TEST(PolynomialProperty, SturmCountMatchesFactorisation) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> nroots(1, 5);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> roots;
    const int k = nroots(rng);
    for (int i = 0; i < k; ++i) {
      roots.emplace_back(num(rng), den(rng));
      if (coin(rng) == 0) roots.push_back(roots.back());  // repeated root
    }
    Polynomial p = from_roots(Rational(num(rng) == 0 ? 1 : 2, 3), roots);
    if (coin(rng) == 0) p = p * Polynomial({Rational(den(rng)), 0, 1});  // x^2 + c, c > 0
    const std::set<Rational> distinct(roots.begin(), roots.end());

    std::vector<kmc::Bound> ends{std::nullopt, Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                 roots.front()};
    for (const auto& lo : ends)
      for (const auto& hi : ends) {
        if (lo && hi && *lo >= *hi) continue;
        EXPECT_EQ(kmc::real_roots_in_interval(p, lo, hi), count_in(distinct, lo, hi)) << p.str();
      }
  }
}

// Res(a prod (x - r_i), b prod (x - s_j)) = a^deg(q) b^deg(p) prod (r_i - s_j)
TEST(PolynomialProperty, ResultantMatchesRootProduct) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> r, s;
    for (int i = deg(rng); i > 0; --i) r.emplace_back(num(rng), den(rng));
    for (int i = deg(rng); i > 0; --i) s.emplace_back(num(rng), den(rng));
    const Rational a(num(rng) == 0 ? 1 : 2), b(Rational(-3, 2));
    Rational expected = kmc::pow(a, static_cast<unsigned>(s.size())) * kmc::pow(b, static_cast<unsigned>(r.size()));
    for (const auto& x : r)
      for (const auto& y : s) expected *= x - y;
    EXPECT_EQ(kmc::resultant(from_roots(a, r), from_roots(b, s)), expected);
  }
}
