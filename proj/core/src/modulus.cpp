#include "takagi/modulus.hpp"

#include <cmath>
#include <stdexcept>

#include "takagi/parallel.hpp"

namespace takagi {

namespace {

void require_step(const Rational& h) {
  if (sgn(h) <= 0 || cmp(h, 1) > 0) throw std::invalid_argument("h = " + h.get_str() + " outside (0, 1]");
}

struct ScanMax {
  ScaledQuad max;
  std::size_t witness = 0;
};

// Double-precision values only prune candidates; every decision that could
// change the result is made with exact integer arithmetic.
ScanMax scan_step(std::span<const ScaledQuad> v, std::size_t step) {
  ScanMax best{abs(v[step] - v[0]), 0};
  double best_approx = approx(best.max);
  for (std::size_t i = 1; i + step < v.size(); ++i) {
    const ScaledQuad d = v[i + step] - v[i];
    const double da = std::fabs(approx(d));
    const double margin = 1e-9 * (1.0 + std::fabs(static_cast<double>(d.a)) + 2.0 * std::fabs(static_cast<double>(d.b)));
    if (da + margin < best_approx) continue;
    const ScaledQuad ad = abs(d);
    if (compare(ad, best.max) > 0) {
      best = {ad, i};
      best_approx = approx(ad);
    }
  }
  return best;
}

ModulusReport make_report(const GridSamples& samples, std::size_t step, const ScanMax& m) {
  ModulusReport r;
  r.h = make_rational(Integer(static_cast<unsigned long>(step)), pow2_integer(samples.level()));
  r.nu = nu(r.h);
  r.omega = omega(r.h);
  r.scan_max = to_quad(m.max, samples.level());
  r.ratio_decimal = quad_to_decimal(r.scan_max / r.omega, 8);
  r.witness_t = samples.point(m.witness).to_rational();
  return r;
}

}  // namespace

unsigned nu(const Rational& h) {
  require_step(h);
  // Start from the bit-length estimate and correct by exact comparison.
  long n = static_cast<long>(mpz_sizeinbase(h.get_den_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(h.get_num_mpz_t(), 2));
  n = std::max(0L, n - 1);
  while (cmp(h, pow2(-n)) > 0) --n;
  while (cmp(h, pow2(-(n + 1))) <= 0) ++n;
  return static_cast<unsigned>(n);
}

QuadValue omega(const Rational& h) {
  const long n = static_cast<long>(nu(h));
  const QuadValue linear = QuadValue(1, Rational(1, 2)) * QuadValue(h) * QuadValue::pow2_half(n);
  const QuadValue constant = QuadValue(Rational(2, 3), Rational(2, 3)) * QuadValue::pow2_half(-n);
  return linear + constant;
}

ModulusReport modulus_scan(const GridSamples& samples, const DyadicRational& h) {
  const std::size_t step = grid_index(h, samples.level());
  if (step == 0) throw std::invalid_argument("modulus scan needs h > 0");
  return make_report(samples, step, scan_step(samples.values(), step));
}

ModulusReport modulus_scan(const TakagiFunction& x, unsigned grid_level, const DyadicRational& h) {
  if (grid_level == 0) throw std::invalid_argument("modulus scan needs grid level >= 1");
  grid_index(h, grid_level);
  return modulus_scan(sample_grid(x, grid_level), h);
}

std::vector<ModulusReport> modulus_scan_all(const GridSamples& samples) {
  const std::size_t steps = samples.size() - 1;
  const auto v = samples.values();
  auto chunks = map_chunks(steps, [&](std::size_t begin, std::size_t end) {
    std::vector<ScanMax> out;
    out.reserve(end - begin);
    for (std::size_t s = begin; s < end; ++s) out.push_back(scan_step(v, s + 1));
    return out;
  });
  std::vector<ModulusReport> reports;
  reports.reserve(steps);
  std::size_t step = 1;
  for (const auto& chunk : chunks) {
    for (const auto& m : chunk) reports.push_back(make_report(samples, step++, m));
  }
  return reports;
}

bool within_sqrt_bound(const QuadValue& increment, const Rational& h, const Rational& c) {
  if (increment.sign() < 0) throw std::invalid_argument("increment must be non-negative");
  return increment.square() <= QuadValue(Rational(c * c * h));
}

std::vector<WitnessRow> witness_ratios(WitnessKind kind, unsigned n_first, unsigned n_last) {
  if (n_first < 1 || n_last > kMaxWitnessLevel || n_first > n_last) {
    throw std::invalid_argument("witness levels must satisfy 1 <= n_first <= n_last <= " +
                                std::to_string(kMaxWitnessLevel));
  }
  const TakagiFunction x_hat(CoefficientScheme::all_plus());
  const TakagiFunction x_lower_star(CoefficientScheme::neg_half_split());
  const QuadValue one_plus_sqrt2(1, 1);
  const QuadValue two_plus_sqrt2(2, 1);

  std::vector<WitnessRow> rows;
  for (unsigned n = n_first; n <= n_last; ++n) {
    WitnessRow row;
    row.n = n;
    row.h = Rational(Rational(2, 3) * pow2(-static_cast<long>(n)));
    const QuadValue h(row.h);
    const QuadValue w = omega(row.h);
    if (kind == WitnessKind::part_a) {
      row.t = 0;
      row.increment = (eval_thirds(x_hat, row.h) - x_hat.eval_dyadic(DyadicRational())).abs();
      row.predicted = w - one_plus_sqrt2 * h;
    } else {
      row.t = Rational(Rational(1, 2) - Rational(1, 3) * pow2(-static_cast<long>(n)));
      row.increment = eval_thirds(x_lower_star, Rational(row.t + row.h)) - eval_thirds(x_lower_star, row.t);
      row.predicted = QuadValue::sqrt2() * w - two_plus_sqrt2 * h;
    }
    row.ratio_decimal = quad_to_decimal(row.increment / w, 8);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace takagi
