#pragma once

#include <cstdint>
#include <utility>

#include "takagi/exact.hpp"
#include "takagi/scheme.hpp"

namespace takagi {

/// Value of a truncated series together with a certified bound on the
/// distance to the limit.
struct ApproxValue {
  QuadValue value;
  QuadValue bound;
};

/// x = sum_m sum_k theta_{m,k} e_{m,k}, one member of the class defined by a
/// coefficient scheme. Immutable; safe to share across threads.
class TakagiFunction {
 public:
  explicit TakagiFunction(CoefficientScheme scheme) : scheme_(std::move(scheme)) {}

  const CoefficientScheme& scheme() const { return scheme_; }
  int coefficient(unsigned m, std::int64_t k) const { return scheme_.coefficient(m, k); }

  /// Partial sum x^n(t) over generations m < n. Requires t in [0, 1].
  QuadValue eval_partial(unsigned n, const Rational& t) const;

  /// Exact x(j / 2^N) = x^N(j / 2^N): generations m >= N vanish on the grid.
  QuadValue eval_dyadic(const DyadicRational& t) const;

  /// x^M(t) for the smallest M whose tail bound (2 + sqrt 2) 2^{-(M+2)/2}
  /// does not exceed tol.
  ApproxValue eval_approx(const Rational& t, const Rational& tol) const;

 private:
  CoefficientScheme scheme_;
};

/// Certified sup-norm bound on x - x^M for every x in the class.
QuadValue tail_bound(unsigned M);

/// max of x-hat over [0, 1], attained at 1/3 and 2/3: (2 + sqrt 2) / 3.
QuadValue uniform_maximum();

/// Exact values of x-hat (all_plus), x* (half_split) and x_* (neg_half_split)
/// at points whose reduced denominator is 3 * 2^n. Uses the self-similarity
/// x-hat(t) = x-hat^n(t) + 2^{-n/2} x-hat(2^n t - k) on [k 2^{-n}, (k+1) 2^{-n}],
/// the constant x-hat(1/3) = x-hat(2/3) = (2 + sqrt 2)/3, and
/// x*(1/2 + s) = 1/2 - x-hat(s) for s in [0, 1/2].
QuadValue eval_thirds(const TakagiFunction& x, const Rational& t);

/// Faber-Schauder coefficient 2^{m/2} (2 f((2k+1)/2^{m+1}) - f(k/2^m) - f((k+1)/2^m))
/// of any function f that can be evaluated exactly at dyadic points.
template <class Fn>
QuadValue recover_coefficient(Fn&& f, unsigned m, std::int64_t k) {
  const Integer kk(static_cast<long>(k));
  const QuadValue left = f(make_rational(kk, pow2_integer(m)));
  const QuadValue right = f(make_rational(kk + 1, pow2_integer(m)));
  const QuadValue mid = f(make_rational(2 * kk + 1, pow2_integer(m + 1)));
  return QuadValue::pow2_half(static_cast<long>(m)) * (QuadValue(2) * mid - left - right);
}

QuadValue recover_coefficient(const TakagiFunction& x, unsigned m, std::int64_t k);

}  // namespace takagi
