#include "takagi/follmer.hpp"

#include <stdexcept>

namespace takagi {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
}

RationalPolynomial RationalPolynomial::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<Rational> coefficients;
  for (;;) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    coefficients.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return RationalPolynomial(std::move(coefficients));
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    d.emplace_back(coefficients_[k] * static_cast<unsigned long>(k));
  }
  return RationalPolynomial(std::move(d));
}

QuadValue RationalPolynomial::operator()(const QuadValue& u) const {
  QuadValue acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= u;
    acc += QuadValue(*it);
  }
  return acc;
}

std::string RationalPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (k) s += ',';
    s += coefficients_[k].get_str();
  }
  return s;
}

namespace {

void require_level(const GridSamples& x, unsigned n) {
  if (n == 0 || n > x.level()) {
    throw std::invalid_argument("partition level " + std::to_string(n) + " needs samples of level >= n >= 1");
  }
}

// Evaluates a polynomial at grid values (A + B sqrt 2) / 2^N in Z[sqrt 2]:
// g(u) = (P + Q sqrt 2) * scale, with one common scale for every sample.
class ScaledEvaluator {
 public:
  ScaledEvaluator(const RationalPolynomial& g, unsigned level) {
    const auto& c = g.coefficients();
    if (c.empty()) return;
    Integer den = 1;
    for (const auto& ck : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ck.get_den().get_mpz_t());
    const std::size_t d = c.size() - 1;
    terms_.resize(c.size());
    for (std::size_t k = 0; k <= d; ++k) {
      terms_[k] = Integer(c[k].get_num() * (den / c[k].get_den())) * pow2_integer((d - k) * level);
    }
    scale_ = make_rational(1, den * pow2_integer(d * level));
  }

  const Rational& scale() const { return scale_; }

  void operator()(ScaledQuad u, Integer& p, Integer& q) const {
    if (terms_.empty()) {
      p = 0;
      q = 0;
      return;
    }
    p = terms_.back();
    q = 0;
    const long a = u.a;
    const long b = u.b;
    for (std::size_t k = terms_.size() - 1; k-- > 0;) {
      // (p + q sqrt2)(a + b sqrt2) + terms_[k]
      tmp_ = p * b + q * a;
      p = p * a + 2 * (q * b) + terms_[k];
      q.swap(tmp_);
    }
  }

 private:
  std::vector<Integer> terms_;
  Rational scale_{1};
  mutable Integer tmp_;
};

// sum_j (P_j + Q_j sqrt 2)(dA_j + dB_j sqrt 2) accumulated in integers.
struct ScaledSum {
  Integer p;
  Integer q;

  void add_product(const Integer& gp, const Integer& gq, ScaledQuad delta) {
    p += gp * static_cast<long>(delta.a) + 2 * (gq * static_cast<long>(delta.b));
    q += gp * static_cast<long>(delta.b) + gq * static_cast<long>(delta.a);
  }

  QuadValue value(const Rational& scale) const { return {Rational(p) * scale, Rational(q) * scale}; }
};

}  // namespace

QuadValue follmer_sum(const RationalPolynomial& g, const GridSamples& x, unsigned n, const DyadicRational& t) {
  require_level(x, n);
  const std::size_t intervals = grid_index(t, n);
  const std::size_t stride = std::size_t{1} << (x.level() - n);
  const ScaledEvaluator eval(g, x.level());
  ScaledSum sum;
  Integer gp;
  Integer gq;
  for (std::size_t i = 0; i < intervals; ++i) {
    const ScaledQuad left = x[i * stride];
    eval(left, gp, gq);
    sum.add_product(gp, gq, x[(i + 1) * stride] - left);
  }
  // The increments carry an extra 1 / 2^N.
  return sum.value(Rational(eval.scale() * pow2(-static_cast<long>(x.level()))));
}

QuadValue follmer_sum(const RationalPolynomial& g, const TakagiFunction& x, unsigned n, const DyadicRational& t) {
  grid_index(t, n);
  return follmer_sum(g, sample_grid(x, n), n, t);
}

QuadValue ito_residual(const RationalPolynomial& f, const GridSamples& x, unsigned n, const DyadicRational& t) {
  require_level(x, n);
  const std::size_t intervals = grid_index(t, n);
  const std::size_t stride = std::size_t{1} << (x.level() - n);
  const RationalPolynomial f2 = f.derivative().derivative();
  const ScaledEvaluator eval2(f2, x.level());

  Integer hp;
  Integer hq;
  ScaledSum time_sum;  // sum f''(x(s)), times 2^{-n} / 2 at the end
  for (std::size_t i = 0; i < intervals; ++i) {
    eval2(x[i * stride], hp, hq);
    time_sum.p += hp;
    time_sum.q += hq;
  }
  const QuadValue time_term = time_sum.value(Rational(eval2.scale() * pow2(-static_cast<long>(n) - 1)));
  const QuadValue integral = follmer_sum(f.derivative(), x, n, t);
  return f(x.value(intervals * stride)) - f(x.value(0)) - integral - time_term;
}

QuadValue ito_residual(const RationalPolynomial& f, const TakagiFunction& x, unsigned n, const DyadicRational& t) {
  grid_index(t, n);
  return ito_residual(f, sample_grid(x, n), n, t);
}

}  // namespace takagi
