#include "takagi/exact.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace takagi {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow2_integer(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational pow2(long e) {
  if (e >= 0) return Rational(pow2_integer(static_cast<unsigned long>(e)));
  return Rational(Integer(1), pow2_integer(static_cast<unsigned long>(-e)));
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sign(const Rational& q) { return sgn(q); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("malformed rational '" + std::string(text) +
                                    "' (use num/den, decimals are not accepted)");
      }
    }
    std::string digits(s.substr(s.front() == '+' ? 1 : 0));
    return Integer(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer to_integer(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer r(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  r <<= 64;
  r += Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  return negative ? Integer(-r) : r;
}

// --- DyadicRational ---------------------------------------------------------

DyadicRational::DyadicRational(Integer numerator, unsigned exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (sgn(numerator_) == 0) {
    exponent_ = 0;
    return;
  }
  const unsigned long twos = mpz_scan1(numerator_.get_mpz_t(), 0);
  const unsigned shift = static_cast<unsigned>(std::min<unsigned long>(twos, exponent_));
  numerator_ >>= shift;
  exponent_ -= shift;
}

DyadicRational DyadicRational::from_rational(const Rational& q) {
  const Integer& den = q.get_den();
  const unsigned long twos = mpz_scan1(den.get_mpz_t(), 0);
  if (den != pow2_integer(twos)) {
    throw std::invalid_argument("not a dyadic rational: " + q.get_str());
  }
  return {q.get_num(), static_cast<unsigned>(twos)};
}

Rational DyadicRational::to_rational() const {
  return make_rational(numerator_, pow2_integer(exponent_));
}

Integer DyadicRational::index_at(unsigned level) const {
  if (!on_grid(level)) throw std::invalid_argument(to_string() + " is not on the level-" +
                                                   std::to_string(level) + " grid");
  Integer j = numerator_;
  j <<= (level - exponent_);
  return j;
}

std::string DyadicRational::to_string() const { return to_rational().get_str(); }

std::strong_ordering operator<=>(const DyadicRational& lhs, const DyadicRational& rhs) {
  const int c = cmp(lhs.to_rational(), rhs.to_rational());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// --- QuadValue --------------------------------------------------------------

QuadValue::QuadValue(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QuadValue QuadValue::pow2_half(long e) {
  // 2^(e/2) = 2^floor(e/2) * sqrt(2)^(e mod 2)
  const long half = (e >= 0) ? e / 2 : -((-e + 1) / 2);
  if (e - 2 * half == 0) return {pow2(half), 0};
  return {0, pow2(half)};
}

Rational QuadValue::norm() const { return Rational(a_ * a_ - 2 * b_ * b_); }

int QuadValue::sign() const { return quad_sign(a_, b_); }

QuadValue QuadValue::abs() const { return sign() < 0 ? -*this : *this; }

QuadValue QuadValue::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt 2)");
  const Rational n = norm();
  return {Rational(a_ / n), Rational(-b_ / n)};
}

double QuadValue::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::string QuadValue::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s = a_.get_str();
  if (sgn(b_) < 0) {
    s += " - " + Rational(-b_).get_str();
  } else {
    s += " + " + b_.get_str();
  }
  return s + "*sqrt2";
}

QuadValue& QuadValue::operator+=(const QuadValue& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadValue& QuadValue::operator*=(const QuadValue& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_.swap(a);
  b_.swap(b);
  return *this;
}

QuadValue& QuadValue::operator/=(const QuadValue& o) { return *this *= o.inverse(); }

int quad_sign(const Rational& a, const Rational& b) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: |a| vs |b| sqrt 2. Equality is impossible for b != 0.
  const Rational a2 = a * a;
  const Rational b2 = 2 * b * b;
  return cmp(a2, b2) > 0 ? sa : sb;
}

std::strong_ordering quad_compare(const QuadValue& u, const QuadValue& v) {
  const int s = quad_sign(Rational(u.rational_part() - v.rational_part()),
                          Rational(u.sqrt2_part() - v.sqrt2_part()));
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering operator<=>(const QuadValue& u, const QuadValue& v) {
  return quad_compare(u, v);
}

QuadValue min(const QuadValue& u, const QuadValue& v) { return (v < u) ? v : u; }
QuadValue max(const QuadValue& u, const QuadValue& v) { return (u < v) ? v : u; }

namespace {

// Nearest integer to a rational, ties to even.
Integer round_half_even(const Rational& q) {
  Integer n = floor(q);
  const int c = cmp(Rational(q - n), Rational(1, 2));
  if (c > 0 || (c == 0 && mpz_odd_p(n.get_mpz_t()))) n += 1;
  return n;
}

// Nearest integer to a + b sqrt 2 for b != 0 (no ties possible). An integer
// square root gives a candidate within one unit; the exact sign test then
// certifies it.
Integer round_irrational(const Rational& a, const Rational& b) {
  constexpr unsigned long kGuardBits = 32;
  const Integer guard = pow2_integer(kGuardBits);
  // |b| sqrt 2 * guard = sqrt(2 num^2 guard^2) / den
  const Integer& bn = b.get_num();
  const Integer& bd = b.get_den();
  Integer radicand = 2 * bn * bn * guard * guard;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Rational approx = a + Rational(sgn(b) * root, bd * guard);
  approx.canonicalize();
  Integer n = floor(Rational(approx + Rational(1, 2)));
  // Invariant sought: n - 1/2 < a + b sqrt 2 < n + 1/2.
  for (;;) {
    if (quad_sign(Rational(a - n + Rational(1, 2)), b) < 0) {
      n -= 1;
    } else if (quad_sign(Rational(a - n - Rational(1, 2)), b) > 0) {
      n += 1;
    } else {
      return n;
    }
  }
}

}  // namespace

std::string quad_to_decimal(const QuadValue& u, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("quad_to_decimal needs at least one digit");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Rational a = u.rational_part() * scale;
  const Rational b = u.sqrt2_part() * scale;
  const Integer n = (sgn(b) == 0) ? round_half_even(a) : round_irrational(a, b);

  const bool negative = sgn(n) < 0;
  const Integer mag = abs(n);
  Integer whole;
  Integer frac;
  mpz_tdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), mag.get_mpz_t(), scale.get_mpz_t());
  std::string frac_str = frac.get_str();
  frac_str.insert(0, digits - frac_str.size(), '0');
  return (negative ? "-" : "") + whole.get_str() + "." + frac_str;
}

std::ostream& operator<<(std::ostream& os, const QuadValue& u) { return os << u.to_string(); }
std::ostream& operator<<(std::ostream& os, const DyadicRational& t) { return os << t.to_string(); }

}  // namespace takagi
