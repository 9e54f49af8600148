#pragma once

// Pathwise (Follmer) Ito calculus with members of the class as integrators:
// left-point Riemann sums along T_n and the Ito-formula residual using the
// quadratic variation <x>_t = t.

#include <string>
#include <string_view>
#include <vector>

#include "takagi/exact.hpp"
#include "takagi/grid.hpp"
#include "takagi/takagi_function.hpp"

namespace takagi {

/// Polynomial with rational coefficients, ascending degree.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  /// Comma-separated rational coefficients, constant term first: "0,0,1" is u^2.
  static RationalPolynomial parse(std::string_view text);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  RationalPolynomial derivative() const;
  QuadValue operator()(const QuadValue& u) const;
  std::string to_string() const;

 private:
  std::vector<Rational> coefficients_;  // no trailing zeros
};

/// sum over [s, s'] in T_n within [0, t] of g(x(s)) (x(s') - x(s)).
QuadValue follmer_sum(const RationalPolynomial& g, const GridSamples& x, unsigned n, const DyadicRational& t);
QuadValue follmer_sum(const RationalPolynomial& g, const TakagiFunction& x, unsigned n, const DyadicRational& t);

/// f(x(t)) - f(x(0)) - follmer_sum(f', x, n, t) - 1/2 sum f''(x(s)) (s' - s).
QuadValue ito_residual(const RationalPolynomial& f, const GridSamples& x, unsigned n, const DyadicRational& t);
QuadValue ito_residual(const RationalPolynomial& f, const TakagiFunction& x, unsigned n, const DyadicRational& t);

}  // namespace takagi
