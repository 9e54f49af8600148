#pragma once

#include <cstdint>

#include "takagi/exact.hpp"

namespace takagi {

/// Generation m and translate k of the wedge e_{m,k}(t) = 2^{-m/2} e_{0,0}(2^m t - k).
struct BasisIndex {
  unsigned m = 0;
  std::int64_t k = 0;
};

/// e_{m,k}(t), zero outside [k 2^{-m}, (k+1) 2^{-m}]. Defined for every k.
QuadValue eval_e(BasisIndex idx, const Rational& t);

struct WedgePeak {
  DyadicRational location;  // (2k+1) / 2^{m+1}
  QuadValue height;         // 2^{-(m+2)/2}
};

WedgePeak wedge_peak(BasisIndex idx);

/// f_{m,k} = e_{m,k} + e_{m+1,2k} + e_{m+1,2k+1}.
QuadValue eval_f(BasisIndex idx, const Rational& t);

}  // namespace takagi
