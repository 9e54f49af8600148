#include "takagi/faber_schauder.hpp"

namespace takagi {

QuadValue eval_e(BasisIndex idx, const Rational& t) {
  Rational u = t * pow2(idx.m) - Rational(static_cast<long>(idx.k));
  Rational w = 1 - u;
  const Rational& v = (cmp(u, w) < 0) ? u : w;
  if (sgn(v) <= 0) return {};
  return QuadValue::pow2_half(-static_cast<long>(idx.m)) * QuadValue(v);
}

WedgePeak wedge_peak(BasisIndex idx) {
  return {DyadicRational(Integer(2 * static_cast<long>(idx.k) + 1), idx.m + 1),
          QuadValue::pow2_half(-static_cast<long>(idx.m) - 2)};
}

QuadValue eval_f(BasisIndex idx, const Rational& t) {
  return eval_e(idx, t) + eval_e({idx.m + 1, 2 * idx.k}, t) +
         eval_e({idx.m + 1, 2 * idx.k + 1}, t);
}

}  // namespace takagi
