#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "takagi/follmer.hpp"
#include "takagi/quadvar.hpp"

namespace takagi {
namespace {

TEST(PolynomialTest, ParseEvaluateDifferentiate) {
  const RationalPolynomial p = RationalPolynomial::parse("1, -1/2, 0, 3");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p(QuadValue(2)), QuadValue(24));
  EXPECT_EQ(p(QuadValue::sqrt2()), QuadValue(Rational(1), Rational(11, 2)));
  EXPECT_EQ(p.derivative().coefficients(), (std::vector<Rational>{Rational(-1, 2), 0, 9}));
  EXPECT_EQ(RationalPolynomial::parse("5").derivative().degree(), -1);
  EXPECT_EQ(RationalPolynomial::parse("0,0,0").degree(), -1);
  EXPECT_EQ(RationalPolynomial::parse("0,0,1").to_string(), RationalPolynomial::parse("0,0,1,0").to_string());
  EXPECT_THROW(RationalPolynomial::parse(""), std::invalid_argument);
  EXPECT_THROW(RationalPolynomial::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(RationalPolynomial::parse("0.5"), std::invalid_argument);
}

TEST(FollmerTest, ConstantIntegrandTelescopes) {
  const RationalPolynomial one = RationalPolynomial::parse("1");
  for (const auto& s : builtin_schemes()) {
    const TakagiFunction x(s);
    const GridSamples g = sample_grid(x, 10);
    for (long j = 0; j <= 8; ++j) {
      const DyadicRational t(j, 3);
      EXPECT_EQ(follmer_sum(one, g, 6, t), x.eval_dyadic(t) - x.eval_dyadic(DyadicRational(0, 0)));
    }
  }
}

// sum x(s) dx = (x(t)^2 - x(0)^2 - <x>^n_t) / 2, the discrete summation-by-parts identity.
TEST(FollmerTest, LinearIntegrandSummationByParts) {
  const RationalPolynomial id = RationalPolynomial::parse("0,1");
  for (const auto& s : builtin_schemes()) {
    const TakagiFunction x(s);
    for (unsigned n = 1; n <= 9; ++n) {
      const DyadicRational t(3, 2);
      if (!t.on_grid(n)) continue;
      const QuadValue xt = x.eval_dyadic(t);
      EXPECT_EQ(follmer_sum(id, x, n, t), (xt * xt - qv_approx(x, n, t)) * QuadValue(Rational(1, 2)));
    }
  }
}

TEST(FollmerTest, SquareResidualIsQuadraticVariationMinusTime) {
  const RationalPolynomial sq = RationalPolynomial::parse("0,0,1");
  for (const auto& s : builtin_schemes()) {
    const TakagiFunction x(s);
    const GridSamples g = sample_grid(x, 12);
    for (unsigned n = 1; n <= 12; ++n) {
      const DyadicRational one(1, 0);
      const QuadValue r = ito_residual(sq, g, n, one);
      EXPECT_EQ(r, quadratic_variation(g, n, one) - QuadValue(1));
      EXPECT_EQ(r, QuadValue(-pow2(-static_cast<long>(n))));
    }
  }
}

TEST(FollmerTest, AffineFunctionsHaveZeroResidual) {
  const RationalPolynomial affine = RationalPolynomial::parse("3,-7/5");
  const TakagiFunction x(CoefficientScheme::alt_mk());
  for (unsigned n = 1; n <= 8; ++n) EXPECT_TRUE(ito_residual(affine, x, n, DyadicRational(1, 1)).is_zero());
}

TEST(FollmerTest, MatchesOracleLeftPointSum) {
  const RationalPolynomial g = RationalPolynomial::parse("1/3,-2,0,5");
  for (const auto& s : builtin_schemes()) {
    const auto theta = [&s](unsigned m, std::int64_t k) { return s.coefficient(m, k); };
    const auto values = oracle::grid_values(theta, 5);
    oracle::Quad expected{0, 0};
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
      const oracle::Quad u = values[j];
      const oracle::Quad gu = oracle::Quad{oracle::BigRational(1, 3), 0} - oracle::Quad{2, 0} * u +
                              oracle::Quad{5, 0} * u * u * u;
      expected = expected + gu * (values[j + 1] - values[j]);
    }
    EXPECT_EQ(oracle::from_gmp(follmer_sum(g, TakagiFunction(s), 5, DyadicRational(1, 0))), expected) << s.spec();
  }
}

// Reference values from an independent floating-point refinement of x-hat.
TEST(FollmerTest, CubicResidualMatchesFloatingPointReference) {
  const RationalPolynomial cube = RationalPolynomial::parse("0,0,0,1");
  const GridSamples g = sample_grid(TakagiFunction(CoefficientScheme::all_plus()), 16);
  const DyadicRational one(1, 0);
  EXPECT_NEAR(ito_residual(cube, g, 8, one).to_double(), -0.20280932125918305, 1e-12);
  EXPECT_NEAR(ito_residual(cube, g, 12, one).to_double(), -0.055083625924719826, 1e-12);
  EXPECT_NEAR(ito_residual(cube, g, 16, one).to_double(), -0.014051605682564805, 1e-12);
}

// |R_n(1)| is non-increasing for n = 8..18, allowing one violation per sequence.
// alt_m and block:5 flip the sign of whole generations, which makes the
// residual oscillate; for them only the decay between level blocks is checked.
TEST(FollmerTest, ResidualMagnitudeDecreasesWithLevel) {
  const DyadicRational one(1, 0);
  for (const char* poly : {"0,0,1", "0,0,0,1", "0,-1,0,0,1"}) {
    const RationalPolynomial f = RationalPolynomial::parse(poly);
    for (const auto& s : builtin_schemes()) {
      const GridSamples g = sample_grid(TakagiFunction(s), 18);
      std::vector<QuadValue> r;
      for (unsigned n = 8; n <= 18; ++n) r.push_back(ito_residual(f, g, n, one).abs());
      if (s.kind() == SchemeKind::alt_m || s.kind() == SchemeKind::block) {
        const QuadValue early = *std::max_element(r.begin(), r.begin() + 4);
        const QuadValue late = *std::max_element(r.end() - 4, r.end());
        EXPECT_LT(late, early) << poly << " " << s.spec();
        continue;
      }
      int violations = 0;
      for (std::size_t i = 1; i < r.size(); ++i) violations += r[i] > r[i - 1];
      EXPECT_LE(violations, 1) << poly << " " << s.spec();
    }
  }
}

TEST(FollmerTest, InvalidLevel) {
  const GridSamples g = sample_grid(TakagiFunction(CoefficientScheme::all_plus()), 4);
  EXPECT_THROW(follmer_sum(RationalPolynomial::parse("1"), g, 5, DyadicRational(1, 0)), std::invalid_argument);
  EXPECT_THROW(follmer_sum(RationalPolynomial::parse("1"), g, 3, DyadicRational(1, 4)), std::invalid_argument);
}

}  // namespace
}  // namespace takagi
