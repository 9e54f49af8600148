#pragma once

// Pathwise quadratic variation and covariation along the dyadic partitions
// T_n = {k 2^{-n}}. For t on T_n the sums run over the intervals [s, s']
// of T_n contained in [0, t]; at t = 1 this is the full sum over T_n.

#include <optional>
#include <vector>

#include "takagi/exact.hpp"
#include "takagi/grid.hpp"
#include "takagi/takagi_function.hpp"

namespace takagi {

enum class SeriesTag { qv, covariation, qv_of_sum };

struct QVRow {
  unsigned level = 0;
  DyadicRational t;
  QuadValue value;
  std::optional<QuadValue> limit;  // expected n -> infinity limit, when known

  std::optional<QuadValue> distance() const {
    if (!limit) return std::nullopt;
    return (value - *limit).abs();
  }
};

struct QVSeries {
  SeriesTag tag = SeriesTag::qv;
  std::vector<QVRow> rows;
};

/// <x, y>^n_t from samples of level N >= n (every 2^{N-n}-th sample is used).
QuadValue covariation(const GridSamples& x, const GridSamples& y, unsigned n, const DyadicRational& t);
QuadValue quadratic_variation(const GridSamples& x, unsigned n, const DyadicRational& t);

/// <x>^n_t. Throws std::invalid_argument when t is not on T_n or outside [0, 1].
QuadValue qv_approx(const TakagiFunction& x, unsigned n, const DyadicRational& t);
QuadValue cov_approx(const TakagiFunction& x, const TakagiFunction& y, unsigned n, const DyadicRational& t);
/// <x + y>^n_t from the summed increments.
QuadValue qv_of_sum(const TakagiFunction& x, const TakagiFunction& y, unsigned n, const DyadicRational& t);

/// Rows (n, k stride 2^{-n}, <x>^n) for k = 0 .. 2^n / stride. stride must
/// divide 2^n.
QVSeries qv_profile(const TakagiFunction& x, unsigned n, std::size_t stride);

/// x-hat (all_plus) against y (alt_m), split by parity of the level. Limits:
/// <x-hat + y>^{2n}_t -> 4t/3, <x-hat + y>^{2n+1}_t -> 8t/3,
/// <x-hat, y>^{2n}_t -> -t/3, <x-hat, y>^{2n+1}_t -> t/3.
struct CounterexampleSeries {
  QVSeries even_qv;
  QVSeries odd_qv;
  QVSeries even_cov;
  QVSeries odd_cov;
};

/// Levels from max(1, exponent of t) up to n_max.
CounterexampleSeries counterexample_series(unsigned n_max, const DyadicRational& t);

}  // namespace takagi
