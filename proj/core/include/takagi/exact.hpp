#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals,
// dyadic rationals j/2^N, and the quadratic field Q(sqrt 2).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace takagi {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// 2^e for any integer e.
Rational pow2(long e);
Integer pow2_integer(unsigned long e);

Integer floor(const Rational& q);
int sign(const Rational& q);

/// Parses "p/q" or "p". Decimal notation is rejected so that no precision is
/// lost at input.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer to_integer(__int128 v);

/// t = numerator / 2^exponent, kept normalized (numerator odd, or zero with
/// exponent 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(Integer numerator, unsigned exponent);

  /// Throws std::invalid_argument unless q's denominator is a power of two.
  static DyadicRational from_rational(const Rational& q);

  const Integer& numerator() const { return numerator_; }
  unsigned exponent() const { return exponent_; }

  Rational to_rational() const;
  bool on_grid(unsigned level) const { return exponent_ <= level; }
  /// Index j with t = j / 2^level. Requires on_grid(level).
  Integer index_at(unsigned level) const;
  std::string to_string() const;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& lhs,
                                          const DyadicRational& rhs);

 private:
  Integer numerator_{0};
  unsigned exponent_ = 0;
};

/// a + b*sqrt(2) with rational a, b. The representation is unique since
/// sqrt(2) is irrational, so equality is componentwise.
class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(Rational a, Rational b = 0);  // NOLINT(google-explicit-constructor)
  QuadValue(long a) : QuadValue(Rational(a)) {}  // NOLINT(google-explicit-constructor)

  static QuadValue sqrt2() { return {0, 1}; }
  /// 2^(e/2): rational for even e, rational * sqrt(2) for odd e.
  static QuadValue pow2_half(long e);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  QuadValue conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 2 b^2; zero only for the zero element.
  Rational norm() const;
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;
  QuadValue abs() const;
  QuadValue inverse() const;
  QuadValue square() const { return *this * *this; }

  double to_double() const;
  /// "a + b*sqrt2" with a, b printed as reduced fractions.
  std::string to_string() const;

  QuadValue& operator+=(const QuadValue& o);
  QuadValue& operator-=(const QuadValue& o);
  QuadValue& operator*=(const QuadValue& o);
  QuadValue& operator/=(const QuadValue& o);

  friend QuadValue operator+(QuadValue u, const QuadValue& v) { return u += v; }
  friend QuadValue operator-(QuadValue u, const QuadValue& v) { return u -= v; }
  friend QuadValue operator*(QuadValue u, const QuadValue& v) { return u *= v; }
  friend QuadValue operator/(QuadValue u, const QuadValue& v) { return u /= v; }
  friend QuadValue operator-(const QuadValue& u) { return {-u.a_, -u.b_}; }

  friend bool operator==(const QuadValue& u, const QuadValue& v) {
    return u.a_ == v.a_ && u.b_ == v.b_;
  }
  friend std::strong_ordering operator<=>(const QuadValue& u, const QuadValue& v);

 private:
  Rational a_{0};
  Rational b_{0};
};

/// Sign of a + b*sqrt(2), decided without floating point: immediate when a and
/// b agree in sign, otherwise by comparing a^2 with 2 b^2.
int quad_sign(const Rational& a, const Rational& b);

std::strong_ordering quad_compare(const QuadValue& u, const QuadValue& v);

QuadValue min(const QuadValue& u, const QuadValue& v);
QuadValue max(const QuadValue& u, const QuadValue& v);

/// Correctly rounded (round-half-even) decimal with exactly `digits`
/// fractional digits. Throws std::invalid_argument if digits == 0.
std::string quad_to_decimal(const QuadValue& u, unsigned digits);

std::ostream& operator<<(std::ostream& os, const QuadValue& u);
std::ostream& operator<<(std::ostream& os, const DyadicRational& t);

}  // namespace takagi
