#pragma once

#include <string>
#include <vector>

#include "takagi/exact.hpp"
#include "takagi/grid.hpp"
#include "takagi/takagi_function.hpp"

namespace takagi {

/// floor(-log2 h) for 0 < h <= 1: the n with 2^{-(n+1)} < h <= 2^{-n}.
/// Decided by exact rational comparison.
unsigned nu(const Rational& h);

/// omega(h) = (1 + 1/sqrt 2) h 2^{nu/2} + (sqrt 8 + 2)/3 * 2^{-nu/2}.
QuadValue omega(const Rational& h);

struct ModulusReport {
  Rational h;
  unsigned nu = 0;
  QuadValue omega;
  QuadValue scan_max;        // max over grid t of |x(t + h) - x(t)|
  std::string ratio_decimal;  // scan_max / omega, 8 digits
  Rational witness_t;         // smallest grid t attaining scan_max
};

/// Exact max of |x(t + h) - x(t)| over grid points t with t + h <= 1.
/// h must be a positive multiple of 2^{-grid_level} and at most 1.
ModulusReport modulus_scan(const TakagiFunction& x, unsigned grid_level, const DyadicRational& h);
ModulusReport modulus_scan(const GridSamples& samples, const DyadicRational& h);

/// One report per grid step h = j 2^{-N}, j = 1 .. 2^N, in increasing h.
std::vector<ModulusReport> modulus_scan_all(const GridSamples& samples);

/// Exact test of increment <= C sqrt(h) via increment^2 <= C^2 h.
bool within_sqrt_bound(const QuadValue& increment, const Rational& h, const Rational& c);

enum class WitnessKind {
  part_a,  // x-hat at t = 0, h_n = (2/3) 2^{-n}
  part_b,  // x_* at t_n = 1/2 - (1/3) 2^{-n}, same h_n
};

struct WitnessRow {
  unsigned n = 0;
  Rational t;
  Rational h;
  QuadValue increment;  // computed from exact thirds evaluation
  QuadValue predicted;  // omega(h_n) - (1 + sqrt 2) h_n, or sqrt 2 omega(h_n) - (sqrt 2 + 2) h_n
  std::string ratio_decimal;  // increment / omega(h_n), 8 digits
};

inline constexpr unsigned kMaxWitnessLevel = 60;

/// Rows for n_first <= n <= n_last, 1 <= n_first, n_last <= kMaxWitnessLevel.
std::vector<WitnessRow> witness_ratios(WitnessKind kind, unsigned n_first, unsigned n_last);

}  // namespace takagi
