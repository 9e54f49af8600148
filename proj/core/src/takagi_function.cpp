#include "takagi/takagi_function.hpp"

#include <stdexcept>

#include "takagi/faber_schauder.hpp"

namespace takagi {

namespace {

void require_unit_interval(const Rational& t) {
  if (sgn(t) < 0 || cmp(t, 1) > 0) {
    throw std::invalid_argument("t = " + t.get_str() + " lies outside [0, 1]");
  }
}

// Exact x-hat at t with reduced denominator 3 * 2^n.
QuadValue x_hat_at_third(const Rational& t) {
  const Integer& den = t.get_den();
  const unsigned long n = mpz_scan1(den.get_mpz_t(), 0);
  if (den != 3 * pow2_integer(n)) {
    throw std::invalid_argument("t = " + t.get_str() + " does not have denominator 3 * 2^n");
  }
  static const TakagiFunction x_hat(CoefficientScheme::all_plus());
  return x_hat.eval_partial(static_cast<unsigned>(n), t) +
         QuadValue::pow2_half(-static_cast<long>(n)) * uniform_maximum();
}

}  // namespace

QuadValue TakagiFunction::eval_partial(unsigned n, const Rational& t) const {
  require_unit_interval(t);
  scheme_.require_depth(n);
  QuadValue sum;
  Rational scaled = t;  // 2^m t
  for (unsigned m = 0; m < n; ++m, scaled *= 2) {
    const Integer k = floor(scaled);
    if (k >= pow2_integer(m)) continue;  // t = 1
    const auto kk = static_cast<std::int64_t>(k.get_si());
    const QuadValue term = eval_e({m, kk}, t);
    if (term.is_zero()) continue;
    if (scheme_.coefficient(m, kk) > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

QuadValue TakagiFunction::eval_dyadic(const DyadicRational& t) const {
  return eval_partial(t.exponent(), t.to_rational());
}

ApproxValue TakagiFunction::eval_approx(const Rational& t, const Rational& tol) const {
  if (sgn(tol) <= 0) throw std::invalid_argument("tolerance must be positive");
  require_unit_interval(t);
  const QuadValue target(tol);
  unsigned M = 0;
  while (tail_bound(M) > target) ++M;
  return {eval_partial(M, t), tail_bound(M)};
}

QuadValue tail_bound(unsigned M) {
  return QuadValue(2, 1) * QuadValue::pow2_half(-static_cast<long>(M) - 2);
}

QuadValue uniform_maximum() { return {Rational(2, 3), Rational(1, 3)}; }

QuadValue eval_thirds(const TakagiFunction& x, const Rational& t) {
  require_unit_interval(t);
  const SchemeKind kind = x.scheme().kind();
  if (kind == SchemeKind::all_plus) return x_hat_at_third(t);
  if (kind != SchemeKind::half_split && kind != SchemeKind::neg_half_split) {
    throw std::invalid_argument("exact thirds evaluation supports all_plus, half_split and "
                                "neg_half_split only, got " + x.scheme().spec());
  }
  const Rational half(1, 2);
  QuadValue star = (cmp(t, half) <= 0) ? x_hat_at_third(t)
                                       : QuadValue(half) - x_hat_at_third(Rational(t - half));
  return kind == SchemeKind::half_split ? star : -star;
}

QuadValue recover_coefficient(const TakagiFunction& x, unsigned m, std::int64_t k) {
  return recover_coefficient(
      [&x](const Rational& t) { return x.eval_dyadic(DyadicRational::from_rational(t)); }, m, k);
}

}  // namespace takagi
