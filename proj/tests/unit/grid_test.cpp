#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "takagi/grid.hpp"

namespace takagi {
namespace {

TEST(GridTest, RefinementMatchesDirectEvaluation) {
  for (const auto& s : builtin_schemes()) {
    const TakagiFunction x(s);
    for (unsigned level : {0u, 1u, 5u, 11u}) {
      const GridSamples g = sample_grid(x, level);
      ASSERT_EQ(g.size(), (std::size_t{1} << level) + 1);
      for (std::size_t j = 0; j < g.size(); j += (level > 8 ? 7 : 1)) {
        EXPECT_EQ(g.value(j), x.eval_dyadic(g.point(j))) << s.spec() << " j=" << j;
      }
    }
  }
}

TEST(GridTest, RefinementMatchesOracleDoubleSum) {
  for (const auto& s : builtin_schemes()) {
    const auto theta = [&s](unsigned m, std::int64_t k) { return s.coefficient(m, k); };
    const auto expected = oracle::grid_values(theta, 5);
    const GridSamples g = sample_grid(TakagiFunction(s), 5);
    for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(oracle::from_gmp(g.value(j)), expected[j]);
  }
}

TEST(GridTest, SampleFunctionRoundTrip) {
  const TakagiFunction x(CoefficientScheme::alt_mk());
  const GridSamples direct = sample_grid(x, 6);
  const GridSamples via_fn = sample_function(6, [&x](const DyadicRational& t) { return x.eval_dyadic(t); });
  for (std::size_t j = 0; j < direct.size(); ++j) EXPECT_EQ(direct[j], via_fn[j]);
  EXPECT_THROW(sample_function(2, [](const DyadicRational&) { return QuadValue(Rational(1, 3)); }),
               std::invalid_argument);
}

TEST(GridTest, ArithmeticOnSamples) {
  const GridSamples a = sample_grid(TakagiFunction(CoefficientScheme::all_plus()), 4);
  const GridSamples b = sample_grid(TakagiFunction(CoefficientScheme::alt_m()), 4);
  const GridSamples sum = a + b;
  const GridSamples diff = a - b;
  for (std::size_t j = 0; j < a.size(); ++j) {
    EXPECT_EQ(sum.value(j), a.value(j) + b.value(j));
    EXPECT_EQ(diff.value(j), a.value(j) - b.value(j));
    EXPECT_EQ((-a).value(j), -a.value(j));
  }
  EXPECT_THROW(a + sample_grid(TakagiFunction(CoefficientScheme::alt_m()), 3), std::invalid_argument);
}

TEST(GridTest, ScaledSignAndCompareAreExact) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int i = 0; i < 2000; ++i) {
    const ScaledQuad u{d(rng), d(rng)};
    const ScaledQuad v{d(rng), d(rng)};
    EXPECT_EQ(sign(u), to_quad(u, 0).sign());
    EXPECT_EQ(compare(u, v), (to_quad(u, 3) < to_quad(v, 3)) ? -1 : (to_quad(u, 3) == to_quad(v, 3) ? 0 : 1));
  }
  // Pell-type near cancellations.
  EXPECT_EQ(sign(ScaledQuad{665857, -470832}), 1);
  EXPECT_EQ(sign(ScaledQuad{-665857, 470832}), -1);
}

TEST(GridTest, LimitsAndDepth) {
  const TakagiFunction x(CoefficientScheme::all_plus());
  EXPECT_THROW(sample_grid(x, kMaxGridLevel + 1), std::invalid_argument);
  std::istringstream in("depth 2\n0 0 1\n1 0 -1\n1 1 1\n");
  const TakagiFunction shallow(read_explicit_scheme(in));
  EXPECT_NO_THROW(sample_grid(shallow, 2));
  EXPECT_THROW(sample_grid(shallow, 3), SchemeDepthError);
}

TEST(GridTest, GridIndex) {
  EXPECT_EQ(grid_index(DyadicRational(3, 3), 5), 12u);
  EXPECT_EQ(grid_index(DyadicRational(1, 0), 4), 16u);
  EXPECT_THROW(grid_index(DyadicRational(1, 6), 5), std::invalid_argument);
  EXPECT_THROW(grid_index(DyadicRational(3, 1), 5), std::invalid_argument);
}

}  // namespace
}  // namespace takagi
