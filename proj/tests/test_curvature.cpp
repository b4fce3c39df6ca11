#include "generators.hpp"

#include <gtest/gtest.h>

#include <array>

using kmc::Rational;
using kmc::Vector;
using kmc::basis_vector;
using namespace kmc_test;

namespace {

// Milnor's orthonormal frame oracle: with m_i = (c1 + c2 + c3)/2 - c_i,
// nabla_{e_i} e_{i+1} = m_i e_{i+2} and nabla_{e_i} e_{i+2} = -m_i e_{i+1}
// (indices cyclic), and Ric(e_i) = 2 m_{i+1} m_{i+2}.
struct MilnorOracle {
  std::array<Rational, 3> c;
  std::array<Rational, 3> m;
  MilnorOracle(Rational c1, Rational c2, Rational c3) : c{c1, c2, c3} {
    const Rational half = (c1 + c2 + c3) / 2;
    for (int i = 0; i < 3; ++i) m[i] = half - c[i];
  }
  Vector nabla(std::size_t i, std::size_t j) const {
    Vector v(3);
    if (j == (i + 1) % 3) v[(i + 2) % 3] = m[i];
    if (j == (i + 2) % 3) v[(i + 1) % 3] = -m[i];
    return v;
  }
  Rational ricci(std::size_t i) const { return 2 * m[(i + 1) % 3] * m[(i + 2) % 3]; }
  Rational sectional(std::size_t i, std::size_t j) const {
    const std::size_t k = 3 - i - j;
    return (ricci(i) + ricci(j) - ricci(k)) / 2;
  }
};

}  // namespace

TEST(Connection, FamilyMatchesPublishedClosedForms) {
  for (auto [c2, c3] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {Rational(-5, 2), Rational(3, 2)}, {0, 1},
                                                                   {3, Rational(-1, 3)}}) {
    const auto g = geometry(family(2, c2, c3));
    auto nabla = [&](std::size_t i, std::size_t j) {
      return kmc::covariant_derivative(g.gamma, basis_vector(3, i), basis_vector(3, j));
    };
    const Vector zero(3);
    EXPECT_EQ(nabla(0, 0), zero);
    EXPECT_EQ(nabla(1, 1), zero);
    EXPECT_EQ(nabla(2, 2), zero);
    EXPECT_EQ(nabla(0, 1), (Vector{0, 0, (c2 + c3 - 2) / 2}));
    EXPECT_EQ(nabla(1, 0), (Vector{0, 0, (c2 - c3 - 2) / 2}));
    EXPECT_EQ(nabla(0, 2), (Vector{0, -(c2 + c3 - 2) / 2, 0}));
    EXPECT_EQ(nabla(2, 0), (Vector{0, (2 + c2 - c3) / 2, 0}));
  }
}

TEST(Connection, MilnorFramesMatchOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational c1 = random_rational(rng), c2 = random_rational(rng), c3 = random_rational(rng);
    const MilnorOracle oracle(c1, c2, c3);
    const auto g = geometry(family(c1, c2, c3));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(kmc::covariant_derivative(g.gamma, basis_vector(3, i), basis_vector(3, j)), oracle.nabla(i, j));
        EXPECT_EQ(g.ricci(i, j), i == j ? oracle.ricci(i) : Rational(0));
      }
      for (std::size_t j = i + 1; j < 3; ++j)
        EXPECT_EQ(kmc::sectional_curvature(g.metric, g.r, basis_vector(3, i), basis_vector(3, j)),
                  oracle.sectional(i, j));
    }
  }
}

TEST(Curvature, KappaMinusMuMember) {
  const auto g = geometry(family(2, Rational(-5, 2), Rational(3, 2)));
  EXPECT_EQ(g.ricci.to_matrix(), kmc::Matrix::from_rows({{-6, 0, 0}, {0, 3, 0}, {0, 0, -9}}));
  EXPECT_EQ(kmc::scalar_curvature(g.metric, g.ricci), Rational(-12));
  auto k = [&](std::size_t i, std::size_t j) {
    return kmc::sectional_curvature(g.metric, g.r, basis_vector(3, i), basis_vector(3, j));
  };
  EXPECT_EQ(k(0, 1), Rational(3));
  EXPECT_EQ(k(0, 2), Rational(-9));
  EXPECT_EQ(k(1, 2), Rational(0));
}

TEST(Curvature, NullityRelationsOfTheFamily) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [c2, c3] = random_family_pair(rng);
    const auto g = geometry(family(2, c2, c3));
    const Rational kappa = 1 - (c3 - c2) * (c3 - c2) / 4;
    const Rational mu = 2 - c2 - c3;
    const Rational lambda = (c3 - c2) / 2;
    const Vector e1 = basis_vector(3, 0), e2 = basis_vector(3, 1), e3 = basis_vector(3, 2);
    EXPECT_EQ(kmc::apply_curvature(g.r, e2, e1, e1), (kappa + mu * lambda) * e2);
    EXPECT_EQ(kmc::apply_curvature(g.r, e3, e1, e1), (kappa - mu * lambda) * e3);
    EXPECT_TRUE(kmc::is_zero(kmc::apply_curvature(g.r, e2, e3, e1)));
  }
}

// The (2,1,1) member is Sasakian but not of constant curvature: the plane
// normal to xi has K = -1. (2,2,2) is the round case.
TEST(Curvature, SasakianMembers) {
  const auto g = geometry(family(2, 1, 1));
  EXPECT_EQ(kmc::sectional_curvature(g.metric, g.r, basis_vector(3, 0), basis_vector(3, 1)), Rational(1));
  EXPECT_EQ(kmc::sectional_curvature(g.metric, g.r, basis_vector(3, 0), basis_vector(3, 2)), Rational(1));
  EXPECT_EQ(kmc::sectional_curvature(g.metric, g.r, basis_vector(3, 1), basis_vector(3, 2)), Rational(-1));
  EXPECT_FALSE(kmc::constant_curvature(g.metric, g.r).has_value());
  EXPECT_EQ(g.ricci.to_matrix(), kmc::Matrix::from_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, 0}}));

  const auto round = geometry(family(2, 2, 2));
  EXPECT_EQ(kmc::constant_curvature(round.metric, round.r), Rational(1));
}

TEST(Curvature, DegeneratePlaneIsTyped) {
  const auto g = geometry(family(2, 0, 1));
  try {
    (void)kmc::sectional_curvature(g.metric, g.r, basis_vector(3, 1), Rational(3) * basis_vector(3, 1));
    FAIL();
  } catch (const kmc::Error& e) {
    EXPECT_EQ(e.code(), kmc::ErrorCode::DegeneratePlane);
  }
}

TEST(Curvature, FiveDimensionalHeisenberg) {
  std::vector<Rational> c(125);
  LieFrame::set_bracket(c, 5, 1, 3, 0, 2);
  LieFrame::set_bracket(c, 5, 2, 4, 0, 2);
  const auto g = geometry(MetricFrame::orthonormal(LieFrame(5, std::move(c))));
  // Ric(xi, xi) = 2n with n = 2 for a Sasakian structure
  EXPECT_EQ(g.ricci(0, 0), Rational(4));
  EXPECT_EQ(kmc::sectional_curvature(g.metric, g.r, basis_vector(5, 0), basis_vector(5, 3)), Rational(1));
  // the phi-plane {e2, e4} of the Heisenberg group has K = -3
  EXPECT_EQ(kmc::sectional_curvature(g.metric, g.r, basis_vector(5, 1), basis_vector(5, 3)), Rational(-3));
}

TEST(LieFrameValidation, RejectsBadConstants) {
  std::vector<Rational> c(27);
  c[(0 * 3 + 0) * 3 + 1] = 1;  // [e1, e1] = e2
  try {
    LieFrame bad(3, c);
    FAIL();
  } catch (const kmc::Error& e) {
    EXPECT_EQ(e.code(), kmc::ErrorCode::AntisymmetryViolation);
  }
  // [e1,e2] = e1, [e2,e3] = e2 leaves a Jacobi defect of -e1
  std::vector<Rational> j(27);
  LieFrame::set_bracket(j, 3, 0, 1, 0, 1);
  LieFrame::set_bracket(j, 3, 1, 2, 1, 1);
  try {
    LieFrame bad(3, j);
    FAIL();
  } catch (const kmc::Error& e) {
    EXPECT_EQ(e.code(), kmc::ErrorCode::JacobiViolation);
  }
  EXPECT_THROW(LieFrame(4, std::vector<Rational>(64)), kmc::Error);
}

TEST(MetricValidation, RejectsIndefiniteMetric) {
  try {
    MetricFrame m(milnor_frame(2, 0, 1), kmc::Matrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
    FAIL();
  } catch (const kmc::Error& e) {
    EXPECT_EQ(e.code(), kmc::ErrorCode::InvalidMetric);
  }
}

// structural identities on random frames and metrics

TEST(CurvatureProperty, LeviCivitaAndSymmetries) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = geometry(random_metric_frame3(rng));
    EXPECT_TRUE(kmc::torsion_defect(g.metric, g.gamma).is_zero());
    EXPECT_TRUE(kmc::metric_compatibility_defect(g.metric, g.gamma).is_zero());
    EXPECT_TRUE(kmc::first_bianchi_defect(g.r).is_zero());
    EXPECT_TRUE(g.ricci.to_matrix().is_symmetric());
    const auto low = kmc::lower_curvature(g.metric, g.r);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          for (std::size_t l = 0; l < 3; ++l) {
            EXPECT_EQ(low(i, j, k, l), -low(j, i, k, l));
            EXPECT_EQ(low(i, j, k, l), -low(i, j, l, k));
            EXPECT_EQ(low(i, j, k, l), low(k, l, i, j));
          }
  }
}

// R(X,Y)Z computed on basis expansions equals the definition
// nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z for constant fields.
TEST(CurvatureProperty, DefinitionOnRandomVectors) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = geometry(random_metric_frame3(rng));
    Vector x(3), y(3), z(3);
    for (std::size_t i = 0; i < 3; ++i) {
      x[i] = random_rational(rng);
      y[i] = random_rational(rng);
      z[i] = random_rational(rng);
    }
    auto nab = [&](const Vector& a, const Vector& b) { return kmc::covariant_derivative(g.gamma, a, b); };
    const Vector expected = nab(x, nab(y, z)) - nab(y, nab(x, z)) - nab(g.metric.frame().bracket(x, y), z);
    EXPECT_EQ(kmc::apply_curvature(g.r, x, y, z), expected);
  }
}
