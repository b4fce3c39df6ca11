#include "generators.hpp"

#include <gtest/gtest.h>

using kmc::Proportionality;
using kmc::Rational;
using kmc::Tensor;
using kmc::Vector;
using kmc::basis_vector;
using namespace kmc_test;

namespace {

// (R(X,Y) . R)(X1..X4) = -R(R(X,Y)X1, X2, X3, X4) - ... - R(X1, X2, X3, R(X,Y)X4)
// for the (0,4) curvature, written out with apply_curvature.
Tensor rr_oracle(const Geometry& g) {
  const std::size_t d = g.metric.dim();
  auto r4 = [&](const Vector& a, const Vector& b, const Vector& c, const Vector& e) {
    return g.metric.inner(kmc::apply_curvature(g.r, a, b, c), e);
  };
  Tensor out(d, 0, 6);
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    const auto idx = out.unflatten(pos);
    const Vector x = basis_vector(d, idx[4]), y = basis_vector(d, idx[5]);
    const Vector a = basis_vector(d, idx[0]), b = basis_vector(d, idx[1]), c = basis_vector(d, idx[2]),
                 e = basis_vector(d, idx[3]);
    auto rxy = [&](const Vector& v) { return kmc::apply_curvature(g.r, x, y, v); };
    out.at(idx) = -r4(rxy(a), b, c, e) - r4(a, rxy(b), c, e) - r4(a, b, rxy(c), e) - r4(a, b, c, rxy(e));
  }
  return out;
}

Proportionality::Kind kind_of(const Tensor& a, const Tensor& b) { return kmc::proportionality_fit(a, b).kind; }

}  // namespace

TEST(Wedge, EndomorphismFormula) {
  const Tensor b = Tensor::from_matrix(kmc::Matrix::from_rows({{1, 2, 0}, {2, 3, 0}, {0, 0, 5}}), 0);
  const Vector x{1, 0, 0}, y{0, 1, 0}, z{1, 1, 1};
  // B(Y,Z) X - B(X,Z) Y = 5 X - 3 Y
  EXPECT_EQ(kmc::wedge_endomorphism(b, x, y, z), (Vector{5, -3, 0}));
  EXPECT_EQ(kmc::wedge_operator(b, 0, 1) * z, kmc::wedge_endomorphism(b, x, y, z));
}

TEST(Proportionality, AllFourOutcomes) {
  Tensor a(3, 0, 2), b(3, 0, 2);
  EXPECT_EQ(kind_of(a, b), Proportionality::Kind::BothZero);
  a(0, 1) = 1;
  EXPECT_EQ(kind_of(a, b), Proportionality::Kind::T2Zero);
  b(0, 1) = 2;
  const auto fit = kmc::proportionality_fit(a, b);
  EXPECT_EQ(fit.kind, Proportionality::Kind::Proportional);
  EXPECT_EQ(fit.factor, Rational(1, 2));
  b(2, 2) = 1;
  EXPECT_EQ(kind_of(a, b), Proportionality::Kind::Independent);
  EXPECT_EQ(kind_of(Tensor(3, 0, 2), b), Proportionality::Kind::Proportional);  // factor 0
  EXPECT_THROW((void)kmc::proportionality_fit(a, Tensor(3, 1, 1)), kmc::Error);
}

TEST(Operators, RankZeroIsRejected) {
  const auto g = geometry(family(2, 0, 1));
  try {
    (void)kmc::q_tensor(g.ricci, Tensor(3, 0, 0));
    FAIL();
  } catch (const kmc::Error& e) {
    EXPECT_EQ(e.code(), kmc::ErrorCode::PreconditionViolation);
  }
  EXPECT_THROW((void)kmc::curvature_action(g.r, Tensor(3, 0, 0)), kmc::Error);
}

TEST(Operators, CurvatureActionMatchesTermwiseOracle) {
  for (auto [c2, c3] : std::vector<std::pair<Rational, Rational>>{{0, 1}, {Rational(-5, 2), Rational(3, 2)}, {1, 1}}) {
    const auto g = geometry(family(2, c2, c3));
    EXPECT_EQ(kmc::curvature_action(g.r, kmc::lower_curvature(g.metric, g.r)), rr_oracle(g));
  }
}

TEST(Classification, KappaMinusMuMember) {
  const auto g = geometry(family(2, Rational(-5, 2), Rational(3, 2)));
  const auto rep = kmc::classify_symmetry(g.metric, g.r, g.ricci);
  EXPECT_FALSE(rep.semisymmetric);
  EXPECT_EQ(rep.rgps.kind, Proportionality::Kind::Proportional);
  EXPECT_EQ(rep.rgps_constant(), Rational(1));
  EXPECT_TRUE(rep.is_rgps());
  // the vector-valued (1,5) reading admits no common factor here
  EXPECT_EQ(rep.rgps_vector_form.kind, Proportionality::Kind::Independent);
}

TEST(Classification, RoundSphereAndFlatCase) {
  const auto round = geometry(family(2, 2, 2));
  const auto r1 = kmc::classify_symmetry(round.metric, round.r, round.ricci);
  EXPECT_TRUE(r1.semisymmetric);
  EXPECT_TRUE(r1.q_g_zero);
  EXPECT_EQ(r1.rgps.kind, Proportionality::Kind::BothZero);

  const auto flat = geometry(family(2, 0, 2));
  const auto r2 = kmc::classify_symmetry(flat.metric, flat.r, flat.ricci);
  EXPECT_TRUE(r2.semisymmetric);
  EXPECT_EQ(r2.rgps.kind, Proportionality::Kind::BothZero);
  EXPECT_TRUE(r2.is_rgps());
}

// (2,1,1) has K = 1, 1, -1 on the frame planes, so R.R does not vanish.
TEST(Classification, PaperSasakianMemberIsNotSemisymmetric) {
  const auto g = geometry(family(2, 1, 1));
  const auto rep = kmc::classify_symmetry(g.metric, g.r, g.ricci);
  EXPECT_FALSE(rep.semisymmetric);
  EXPECT_EQ(rep.rgps.kind, Proportionality::Kind::Proportional);
  EXPECT_EQ(rep.rgps_constant(), Rational(1));
}

// Changing any single curvature entry destroys the fit on (2,-5/2,3/2).
TEST(Classification, SingleEntryPerturbationBreaksFit) {
  const auto g = geometry(family(2, Rational(-5, 2), Rational(3, 2)));
  for (std::size_t pos = 0; pos < g.r.size(); ++pos) {
    Tensor r = g.r;
    r.entries()[pos] += 1;
    const auto rep = kmc::classify_symmetry(g.metric, r, g.ricci);
    EXPECT_FALSE(rep.rgps.holds()) << "entry " << pos;
  }
}

// operator identities on random frames

TEST(OperatorProperty, ExpansionAndStructuralIdentities) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = geometry(random_metric_frame3(rng));
    const Tensor q = kmc::q_tensor(g.ricci, g.r);
    EXPECT_EQ(q, kmc::q_tensor_expanded(g.ricci, g.r));

    EXPECT_TRUE(kmc::curvature_action(g.r, kmc::metric_tensor(g.metric)).is_zero());

    const Tensor low = kmc::lower_curvature(g.metric, g.r);
    for (const Tensor& t : {kmc::q_tensor(g.ricci, low), kmc::q_tensor(kmc::metric_tensor(g.metric), low), q}) {
      for (std::size_t pos = 0; pos < t.size(); ++pos) {
        auto idx = t.unflatten(pos);
        const Rational v = t.at(idx);
        std::swap(idx[idx.size() - 1], idx[idx.size() - 2]);
        EXPECT_EQ(v, -t.at(idx));
      }
    }
  }
}

// In dimension three R.R = Q(S, R) holds identically for the (0,4) curvature.
TEST(OperatorProperty, ThreeDimensionalIdentity) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = geometry(random_metric_frame3(rng));
    const auto act = kmc::curvature_actions(g.metric, g.r, g.ricci);
    EXPECT_EQ(act.rr, act.qs);
  }
}
