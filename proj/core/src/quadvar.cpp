#include "takagi/quadvar.hpp"

#include <stdexcept>

#include "takagi/parallel.hpp"

namespace takagi {

namespace {

struct Accum {
  __int128 a = 0;
  __int128 b = 0;
};

QuadValue from_accum(const Accum& s, unsigned level) {
  const Integer den = pow2_integer(2 * level);
  return {make_rational(to_integer(s.a), den), make_rational(to_integer(s.b), den)};
}

void require_level(const GridSamples& x, unsigned n) {
  if (n == 0 || n > x.level()) {
    throw std::invalid_argument("partition level " + std::to_string(n) + " needs samples of level >= n >= 1");
  }
}

}  // namespace

QuadValue covariation(const GridSamples& x, const GridSamples& y, unsigned n, const DyadicRational& t) {
  if (x.level() != y.level()) throw std::invalid_argument("grid samples have different levels");
  require_level(x, n);
  const std::size_t intervals = grid_index(t, n);
  const std::size_t stride = std::size_t{1} << (x.level() - n);
  const auto xs = x.values();
  const auto ys = y.values();
  const auto parts = map_chunks(intervals, [&](std::size_t begin, std::size_t end) {
    Accum s;
    for (std::size_t i = begin; i < end; ++i) {
      const ScaledQuad dx = xs[(i + 1) * stride] - xs[i * stride];
      const ScaledQuad dy = ys[(i + 1) * stride] - ys[i * stride];
      // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 2 b1 b2 + (a1 b2 + a2 b1) r, r = sqrt 2
      s.a += static_cast<__int128>(dx.a) * dy.a + 2 * static_cast<__int128>(dx.b) * dy.b;
      s.b += static_cast<__int128>(dx.a) * dy.b + static_cast<__int128>(dx.b) * dy.a;
    }
    return s;
  });
  Accum total;
  for (const auto& p : parts) {
    total.a += p.a;
    total.b += p.b;
  }
  return from_accum(total, x.level());
}

QuadValue quadratic_variation(const GridSamples& x, unsigned n, const DyadicRational& t) {
  return covariation(x, x, n, t);
}

QuadValue qv_approx(const TakagiFunction& x, unsigned n, const DyadicRational& t) {
  grid_index(t, n);
  return quadratic_variation(sample_grid(x, n), n, t);
}

QuadValue cov_approx(const TakagiFunction& x, const TakagiFunction& y, unsigned n, const DyadicRational& t) {
  grid_index(t, n);
  return covariation(sample_grid(x, n), sample_grid(y, n), n, t);
}

QuadValue qv_of_sum(const TakagiFunction& x, const TakagiFunction& y, unsigned n, const DyadicRational& t) {
  grid_index(t, n);
  return quadratic_variation(sample_grid(x, n) + sample_grid(y, n), n, t);
}

QVSeries qv_profile(const TakagiFunction& x, unsigned n, std::size_t stride) {
  if (n == 0 || n > kMaxGridLevel) throw std::invalid_argument("qv_profile level out of range");
  const std::size_t intervals = std::size_t{1} << n;
  if (stride == 0 || intervals % stride != 0) {
    throw std::invalid_argument("stride " + std::to_string(stride) + " does not divide 2^" + std::to_string(n));
  }
  const GridSamples samples = sample_grid(x, n);
  QVSeries series{SeriesTag::qv, {}};
  Accum running;
  for (std::size_t j = 0;; ++j) {
    if (j % stride == 0) {
      series.rows.push_back({n, samples.point(j), from_accum(running, n), std::nullopt});
    }
    if (j == intervals) break;
    const ScaledQuad d = samples[j + 1] - samples[j];
    running.a += static_cast<__int128>(d.a) * d.a + 2 * static_cast<__int128>(d.b) * d.b;
    running.b += 2 * static_cast<__int128>(d.a) * d.b;
  }
  return series;
}

CounterexampleSeries counterexample_series(unsigned n_max, const DyadicRational& t) {
  const unsigned n0 = std::max(1u, t.exponent());
  if (n_max < n0) {
    throw std::invalid_argument("t = " + t.to_string() + " first lies on level " + std::to_string(n0) +
                                ", above n_max = " + std::to_string(n_max));
  }
  grid_index(t, n_max);
  const GridSamples x_hat = sample_grid(TakagiFunction(CoefficientScheme::all_plus()), n_max);
  const GridSamples y = sample_grid(TakagiFunction(CoefficientScheme::alt_m()), n_max);
  const GridSamples sum = x_hat + y;
  const Rational tr = t.to_rational();

  CounterexampleSeries out;
  out.even_qv.tag = out.odd_qv.tag = SeriesTag::qv_of_sum;
  out.even_cov.tag = out.odd_cov.tag = SeriesTag::covariation;
  for (unsigned n = n0; n <= n_max; ++n) {
    const bool even = (n % 2 == 0);
    QVRow cov{n, t, covariation(x_hat, y, n, t), QuadValue(Rational(tr * (even ? -1 : 1) / 3))};
    QVRow qv{n, t, quadratic_variation(sum, n, t), QuadValue(Rational(tr * (even ? 4 : 8) / 3))};
    (even ? out.even_cov : out.odd_cov).rows.push_back(std::move(cov));
    (even ? out.even_qv : out.odd_qv).rows.push_back(std::move(qv));
  }
  return out;
}

}  // namespace takagi
