// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "takagi/extrema.hpp"
#include "takagi/follmer.hpp"
#include "takagi/grid.hpp"
#include "takagi/modulus.hpp"
#include "takagi/quadvar.hpp"
#include "takagi/takagi_function.hpp"

namespace {

using namespace takagi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

QuadValue abs_diff(const QuadValue& u, const QuadValue& v) { return (u - v).abs(); }

bool within(const QuadValue& u, const QuadValue& v, const Rational& tol) { return abs_diff(u, v) < QuadValue(tol); }

const std::vector<std::string> kQvSchemes{"all_plus", "alt_m", "alt_mk", "block:5", "bernoulli:1/2:1"};

Outcome jacobsthal_maximum() {
  Outcome o;
  const TakagiFunction x_hat(CoefficientScheme::all_plus());
  double seconds20 = 0;
  for (unsigned n = 1; n <= 20; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const ExtremaReport r = grid_extrema(x_hat, n);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (n == 20) seconds20 = elapsed;
    std::vector<DyadicRational> expected{maximizers(n).lower};
    if (maximizers(n).upper != maximizers(n).lower) expected.push_back(maximizers(n).upper);
    o.require(r.max == max_value(n), "max != M_" + std::to_string(n));
    o.require(r.argmax == expected, "argmax mismatch at N=" + std::to_string(n));
  }
  o.require(seconds20 < 60.0, "N=20 scan took " + std::to_string(seconds20) + " s");
  if (o.pass) o.detail = "N=1..20 exact, N=20 scan " + std::to_string(seconds20) + " s";
  return o;
}

Outcome uniform_max() {
  Outcome o;
  const TakagiFunction x_hat(CoefficientScheme::all_plus());
  const ApproxValue a = x_hat.eval_approx(Rational(1, 3), Rational(1, 100000000));
  o.require(abs_diff(a.value, uniform_maximum()) <= QuadValue(Rational(1, 100000000)), "approx off by > 1e-8");
  o.require(eval_thirds(x_hat, Rational(1, 3)) == uniform_maximum(), "thirds value not exact");
  if (o.pass) o.detail = "x(1/3) = " + eval_thirds(x_hat, Rational(1, 3)).to_string();
  return o;
}

Outcome oscillation() {
  Outcome o;
  const TakagiFunction x_star(CoefficientScheme::half_split());
  QuadValue osc20;
  for (unsigned n = 1; n <= 20; ++n) {
    const QuadValue osc = grid_oscillation(x_star, n);
    o.require(osc == QuadValue(2) * max_value(n) - QuadValue(Rational(1, 2)), "oscillation != 2M_N - 1/2 at N=" + std::to_string(n));
    if (n == 20) osc20 = osc;
  }
  const QuadValue limit(Rational(5, 6), Rational(2, 3));
  o.require(within(osc20, limit, Rational(1, 100000)),
            "N=20 oscillation " + quad_to_decimal(osc20, 8) + " not within 1e-5 of (5+4 sqrt2)/6 = " +
                quad_to_decimal(limit, 8));
  if (o.pass) o.detail = "N=20 oscillation " + quad_to_decimal(osc20, 8);
  return o;
}

Outcome qv_identity_and_profile(Outcome& profile) {
  Outcome o;
  double worst = 0;
  for (const auto& spec : kQvSchemes) {
    const GridSamples g = sample_grid(TakagiFunction(parse_scheme(spec)), 20);
    for (unsigned n = 1; n <= 20; ++n) {
      o.require(quadratic_variation(g, n, DyadicRational(1, 0)) == QuadValue(1 - pow2(-static_cast<long>(n))),
                spec + " fails at n=" + std::to_string(n));
    }
    for (long j : {1L, 2L, 3L}) {
      const DyadicRational t(j, 2);
      const QuadValue qv = quadratic_variation(g, 20, t);
      const QuadValue dist = abs_diff(qv, QuadValue(t.to_rational()));
      worst = std::max(worst, dist.to_double());
      profile.require(dist < QuadValue(Rational(1, 1000)), spec + " at t=" + t.to_string());
    }
  }
  if (o.pass) o.detail = "5 schemes, n=1..20 exact";
  if (profile.pass) profile.detail = "max |<x>_t - t| = " + std::to_string(worst);
  return o;
}

// Direct summation from pointwise values, independent of the grid scans.
QuadValue direct_cov(const TakagiFunction& x, const TakagiFunction& y, unsigned n) {
  QuadValue sum;
  for (long k = 0; k < (1L << n); ++k) {
    const DyadicRational s(k, n);
    const DyadicRational s1(k + 1, n);
    sum += (x.eval_dyadic(s1) - x.eval_dyadic(s)) * (y.eval_dyadic(s1) - y.eval_dyadic(s));
  }
  return sum;
}

Outcome counterexample() {
  Outcome o;
  const unsigned n_max = 20;
  const CounterexampleSeries s = counterexample_series(n_max, DyadicRational(1, 0));
  const Rational tol(1, 1000);
  const Rational tol_sum(2, 1000);
  for (const auto& r : s.even_cov.rows) {
    if (r.level >= 16) o.require(within(r.value, QuadValue(Rational(-1, 3)), tol), "even cov at " + std::to_string(r.level));
  }
  for (const auto& r : s.odd_cov.rows) {
    if (r.level >= 16) o.require(within(r.value, QuadValue(Rational(1, 3)), tol), "odd cov at " + std::to_string(r.level));
  }
  for (const auto& r : s.even_qv.rows) {
    if (r.level >= 16) o.require(within(r.value, QuadValue(Rational(4, 3)), tol_sum), "even qv at " + std::to_string(r.level));
  }
  for (const auto& r : s.odd_qv.rows) {
    if (r.level >= 16) o.require(within(r.value, QuadValue(Rational(8, 3)), tol_sum), "odd qv at " + std::to_string(r.level));
  }
  const TakagiFunction x_hat(CoefficientScheme::all_plus());
  const TakagiFunction y(CoefficientScheme::alt_m());
  o.require(s.even_cov.rows.at(0).level == 2 && s.even_cov.rows[0].value == QuadValue(Rational(-1, 4)), "cov^2 != -1/4");
  o.require(s.odd_cov.rows.at(1).level == 3 && s.odd_cov.rows[1].value == QuadValue(Rational(3, 8)), "cov^3 != 3/8");
  o.require(direct_cov(x_hat, y, 2) == QuadValue(Rational(-1, 4)), "oracle cov^2 != -1/4");
  o.require(direct_cov(x_hat, y, 3) == QuadValue(Rational(3, 8)), "oracle cov^3 != 3/8");
  std::vector<QuadValue> qsum(n_max + 1);
  for (const auto* series : {&s.even_qv, &s.odd_qv}) {
    for (const auto& r : series->rows) qsum[r.level] = r.value;
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    const QuadValue polar = qv_of_sum(x_hat, y, n, DyadicRational(1, 0));
    o.require(polar == QuadValue(2 - 2 * pow2(-static_cast<long>(n))) + QuadValue(2) * cov_approx(x_hat, y, n, DyadicRational(1, 0)),
              "polarization fails at n=" + std::to_string(n));
    o.require(polar == qsum[n], "qv_of_sum mismatch at n=" + std::to_string(n));
  }
  QuadValue min_gap(100);
  for (unsigned n = 4; n < n_max; ++n) min_gap = min(min_gap, abs_diff(qsum[n + 1], qsum[n]));
  o.require(min_gap > QuadValue(1), "consecutive gap dropped to " + quad_to_decimal(min_gap, 6));
  if (o.pass) o.detail = "levels 16..20 within tolerance, min gap n>=4: " + quad_to_decimal(min_gap, 6);
  return o;
}

std::vector<CoefficientScheme> modulus_schemes() {
  std::vector<CoefficientScheme> out = builtin_schemes();
  const std::vector<Rational> ps{Rational(1, 2), Rational(1, 4), Rational(3, 4), Rational(1, 8)};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    for (const auto& p : ps) out.push_back(CoefficientScheme::bernoulli(p, 1000 + seed));
  }
  return out;
}

Outcome modulus_bounds() {
  Outcome o;
  const QuadValue root2 = QuadValue::sqrt2();
  const auto schemes = modulus_schemes();
  for (const auto& s : schemes) {
    const auto reports = modulus_scan_all(sample_grid(TakagiFunction(s), 12));
    for (const auto& r : reports) {
      o.require(r.scan_max <= root2 * r.omega, s.spec() + " exceeds sqrt2 omega at h=" + r.h.get_str());
      if (s.kind() == SchemeKind::all_plus) o.require(r.scan_max <= r.omega, "x-hat exceeds omega at h=" + r.h.get_str());
    }
  }
  if (o.pass) o.detail = std::to_string(schemes.size()) + " schemes, 4096 h each";
  return o;
}

Outcome witnesses() {
  Outcome o;
  const auto a = witness_ratios(WitnessKind::part_a, 1, 12);
  const auto b = witness_ratios(WitnessKind::part_b, 1, 12);
  for (const auto& r : a) o.require(r.increment == r.predicted, "part_a identity fails at n=" + std::to_string(r.n));
  for (const auto& r : b) o.require(r.increment == r.predicted, "part_b identity fails at n=" + std::to_string(r.n));
  o.require(std::stod(a.back().ratio_decimal) >= 0.98, "part_a ratio " + a.back().ratio_decimal);
  o.require(std::stod(b.back().ratio_decimal) >= 1.40, "part_b ratio " + b.back().ratio_decimal);
  if (o.pass) o.detail = "ratios at n=12: " + a.back().ratio_decimal + ", " + b.back().ratio_decimal;
  return o;
}

Outcome coefficient_round_trip() {
  Outcome o;
  long checked = 0;
  for (const auto& s : builtin_schemes()) {
    const TakagiFunction x(s);
    for (unsigned m = 0; m <= 12; ++m) {
      for (std::int64_t k = 0; k < (std::int64_t{1} << m); ++k, ++checked) {
        o.require(recover_coefficient(x, m, k) == QuadValue(s.coefficient(m, k)),
                  s.spec() + " at (" + std::to_string(m) + "," + std::to_string(k) + ")");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " coefficients";
  return o;
}

Outcome ito_residual_check() {
  Outcome o;
  const RationalPolynomial square = RationalPolynomial::parse("0,0,1");
  const RationalPolynomial cube = RationalPolynomial::parse("0,0,0,1");
  const DyadicRational one(1, 0);
  for (const auto& s : builtin_schemes()) {
    const GridSamples g = sample_grid(TakagiFunction(s), 18);
    for (unsigned n = 1; n <= 18; ++n) {
      const QuadValue r = ito_residual(square, g, n, one);
      o.require(r.abs() <= QuadValue(pow2(1 - static_cast<long>(n))), s.spec() + " u^2 at n=" + std::to_string(n));
    }
  }
  const QuadValue r3 = ito_residual(cube, sample_grid(TakagiFunction(CoefficientScheme::all_plus()), 16), 16, one);
  o.require(r3.abs() < QuadValue(Rational(1, 100)), "u^2 bound holds; u^3 residual at n=16 is " + quad_to_decimal(r3, 8));
  if (o.pass) o.detail = "u^3 residual at n=16: " + quad_to_decimal(r3, 8);
  return o;
}

void report(int id, const char* name, const std::function<Outcome()>& run, bool& all) {
  const auto start = std::chrono::steady_clock::now();
  const Outcome o = run();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %d %s (%s; %.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), seconds);
  std::fflush(stdout);
  all = all && o.pass;
}

}  // namespace

int main() {
  bool all = true;
  report(1, "jacobsthal-maximum", jacobsthal_maximum, all);
  report(2, "uniform-maximum", uniform_max, all);
  report(3, "oscillation", oscillation, all);
  Outcome profile;
  report(4, "qv-level-identity", [&] { return qv_identity_and_profile(profile); }, all);
  report(5, "qv-linear-profile", [&] { return profile; }, all);
  report(6, "counterexample", counterexample, all);
  report(7, "modulus-upper-bounds", modulus_bounds, all);
  report(8, "modulus-witnesses", witnesses, all);
  report(9, "coefficient-round-trip", coefficient_round_trip, all);
  report(10, "ito-residual", ito_residual_check, all);
  return all ? 0 : 1;
}
