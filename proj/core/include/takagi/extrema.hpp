#pragma once

#include <vector>

#include "takagi/exact.hpp"
#include "takagi/grid.hpp"
#include "takagi/takagi_function.hpp"

namespace takagi {

/// Exact extrema of a function on the level-N dyadic grid. Ties are listed
/// exhaustively in increasing order.
struct ExtremaReport {
  unsigned level = 0;
  QuadValue max;
  std::vector<DyadicRational> argmax;
  QuadValue min;
  std::vector<DyadicRational> argmin;
  QuadValue oscillation;  // max - min
};

/// Jacobsthal number J_n = (2^n - (-1)^n) / 3.
Integer jacobsthal(unsigned n);

/// The two maximizers of the partial sum x-hat^n.
struct Maximizers {
  DyadicRational lower;  // J_n / 2^n, in [0, 1/2]
  DyadicRational upper;  // 1 - J_n / 2^n
};

Maximizers maximizers(unsigned n);

/// M_n = (2 + sqrt 2 + (-1)^{n+1} 2^{-n} (sqrt 2 - 1)) / 3 - 2^{-n/2},
/// the maximum of x-hat^n.
QuadValue max_value(unsigned n);

ExtremaReport grid_extrema(const TakagiFunction& x, unsigned level);
ExtremaReport grid_extrema(const GridSamples& samples);

QuadValue grid_oscillation(const TakagiFunction& x, unsigned level);

}  // namespace takagi
