#include "takagi/extrema.hpp"

#include <stdexcept>

#include "takagi/parallel.hpp"

namespace takagi {

namespace {

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " needs n >= 1");
}

struct ChunkExtrema {
  ScaledQuad max;
  std::vector<std::size_t> argmax;
  ScaledQuad min;
  std::vector<std::size_t> argmin;
};

void absorb(ChunkExtrema& into, ScaledQuad value, std::size_t j, bool is_first) {
  if (is_first) {
    into.max = into.min = value;
    into.argmax = {j};
    into.argmin = {j};
    return;
  }
  if (const int c = compare(value, into.max); c > 0) {
    into.max = value;
    into.argmax = {j};
  } else if (c == 0) {
    into.argmax.push_back(j);
  }
  if (const int c = compare(value, into.min); c < 0) {
    into.min = value;
    into.argmin = {j};
  } else if (c == 0) {
    into.argmin.push_back(j);
  }
}

}  // namespace

Integer jacobsthal(unsigned n) {
  Integer p = pow2_integer(n);
  p += (n % 2 == 0) ? -1 : 1;
  return p / 3;
}

Maximizers maximizers(unsigned n) {
  require_positive(n, "maximizers");
  const Integer j = jacobsthal(n);
  return {DyadicRational(j, n), DyadicRational(pow2_integer(n) - j, n)};
}

QuadValue max_value(unsigned n) {
  require_positive(n, "max_value");
  const Rational sign = (n % 2 == 1) ? 1 : -1;  // (-1)^{n+1}
  const QuadValue inner = QuadValue(2, 1) + QuadValue(sign * pow2(-static_cast<long>(n))) * QuadValue(-1, 1);
  return inner * QuadValue(Rational(1, 3)) - QuadValue::pow2_half(-static_cast<long>(n));
}

ExtremaReport grid_extrema(const GridSamples& samples) {
  const auto values = samples.values();
  auto chunks = map_chunks(values.size(), [&](std::size_t begin, std::size_t end) {
    ChunkExtrema e;
    for (std::size_t j = begin; j < end; ++j) absorb(e, values[j], j, j == begin);
    return e;
  });

  ChunkExtrema total = std::move(chunks.front());
  for (std::size_t c = 1; c < chunks.size(); ++c) {
    const ChunkExtrema& e = chunks[c];
    if (const int cmp_max = compare(e.max, total.max); cmp_max > 0) {
      total.max = e.max;
      total.argmax = e.argmax;
    } else if (cmp_max == 0) {
      total.argmax.insert(total.argmax.end(), e.argmax.begin(), e.argmax.end());
    }
    if (const int cmp_min = compare(e.min, total.min); cmp_min < 0) {
      total.min = e.min;
      total.argmin = e.argmin;
    } else if (cmp_min == 0) {
      total.argmin.insert(total.argmin.end(), e.argmin.begin(), e.argmin.end());
    }
  }

  ExtremaReport report;
  report.level = samples.level();
  report.max = to_quad(total.max, samples.level());
  report.min = to_quad(total.min, samples.level());
  report.oscillation = report.max - report.min;
  for (std::size_t j : total.argmax) report.argmax.push_back(samples.point(j));
  for (std::size_t j : total.argmin) report.argmin.push_back(samples.point(j));
  return report;
}

ExtremaReport grid_extrema(const TakagiFunction& x, unsigned level) {
  require_positive(level, "grid_extrema");
  return grid_extrema(sample_grid(x, level));
}

QuadValue grid_oscillation(const TakagiFunction& x, unsigned level) {
  return grid_extrema(x, level).oscillation;
}

}  // namespace takagi
