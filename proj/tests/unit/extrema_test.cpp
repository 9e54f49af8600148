#include <gtest/gtest.h>

#include "oracle.hpp"
#include "takagi/extrema.hpp"

namespace takagi {
namespace {

TEST(ExtremaTest, Jacobsthal) {
  const std::vector<long> expected{0, 1, 1, 3, 5, 11, 21, 43, 85, 171};
  for (unsigned n = 0; n < expected.size(); ++n) EXPECT_EQ(jacobsthal(n), Integer(expected[n]));
  for (unsigned n = 2; n < 60; ++n) EXPECT_EQ(jacobsthal(n), jacobsthal(n - 1) + 2 * jacobsthal(n - 2));
}

TEST(ExtremaTest, MaxValueClosedFormKnownEntries) {
  EXPECT_EQ(max_value(4), QuadValue(Rational(7, 16), Rational(5, 16)));
  EXPECT_EQ(max_value(1), QuadValue(Rational(1, 2)));
  EXPECT_EQ(maximizers(4).lower.to_rational(), Rational(5, 16));
  EXPECT_EQ(maximizers(4).upper.to_rational(), Rational(11, 16));
}

// Brute force over the oracle's grid values.
TEST(ExtremaTest, AllPlusScanMatchesOracleBruteForce) {
  const auto theta = [](unsigned, std::int64_t) { return 1; };
  for (unsigned n = 1; n <= 8; ++n) {
    const auto values = oracle::grid_values(theta, n);
    oracle::Quad best = values[0];
    for (const auto& v : values) {
      if (oracle::sign(v - best) > 0) best = v;
    }
    const ExtremaReport r = grid_extrema(TakagiFunction(CoefficientScheme::all_plus()), n);
    EXPECT_EQ(oracle::from_gmp(r.max), best) << n;
    EXPECT_EQ(r.max, max_value(n));
    std::vector<DyadicRational> expected{maximizers(n).lower, maximizers(n).upper};
    if (n == 1) expected.pop_back();  // J_1/2 = 1 - J_1/2
    EXPECT_EQ(r.argmax, expected);
    EXPECT_TRUE(r.min.is_zero());
    EXPECT_EQ(r.argmin, (std::vector<DyadicRational>{DyadicRational(0, 0), DyadicRational(1, 0)}));
  }
}

TEST(ExtremaTest, HalfSplitLevelFour) {
  const ExtremaReport r = grid_extrema(TakagiFunction(CoefficientScheme::half_split()), 4);
  EXPECT_EQ(r.max, max_value(4));
  EXPECT_EQ(r.argmax, std::vector<DyadicRational>{DyadicRational(5, 4)});
  EXPECT_EQ(r.min, QuadValue(Rational(1, 2)) - max_value(4));
  EXPECT_EQ(r.argmin, std::vector<DyadicRational>{DyadicRational(13, 4)});
  EXPECT_EQ(r.oscillation, QuadValue(2) * max_value(4) - QuadValue(Rational(1, 2)));
}

TEST(ExtremaTest, OscillationIsMaxMinusMinForEveryScheme) {
  for (const auto& s : builtin_schemes()) {
    const TakagiFunction x(s);
    const GridSamples g = sample_grid(x, 9);
    const ExtremaReport r = grid_extrema(g);
    EXPECT_EQ(r.oscillation, r.max - r.min);
    EXPECT_EQ(grid_oscillation(x, 9), r.oscillation);
    for (std::size_t j = 0; j < g.size(); ++j) {
      EXPECT_LE(g.value(j), r.max);
      EXPECT_GE(g.value(j), r.min);
    }
    for (const auto& t : r.argmax) EXPECT_EQ(x.eval_dyadic(t), r.max);
    for (const auto& t : r.argmin) EXPECT_EQ(x.eval_dyadic(t), r.min);
    EXPECT_TRUE(std::is_sorted(r.argmax.begin(), r.argmax.end()));
  }
}

TEST(ExtremaTest, MaximumIncreasesWithLevel) {
  for (unsigned n = 1; n < 40; ++n) EXPECT_LT(max_value(n), max_value(n + 1));
  for (unsigned n = 1; n < 40; ++n) EXPECT_LT(max_value(n), uniform_maximum());
}

TEST(ExtremaTest, ChunkedScanKeepsTiesInOrder) {
  // Level 14 exceeds the minimum chunk size, exercising the merge of chunk results.
  setenv("TAKAGI_THREADS", "3", 1);
  const ExtremaReport r = grid_extrema(TakagiFunction(CoefficientScheme::all_plus()), 14);
  unsetenv("TAKAGI_THREADS");
  EXPECT_EQ(r.max, max_value(14));
  EXPECT_EQ(r.argmax, (std::vector<DyadicRational>{maximizers(14).lower, maximizers(14).upper}));
  EXPECT_EQ(r.argmin.size(), 2u);
}

}  // namespace
}  // namespace takagi
