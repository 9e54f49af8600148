#include "takagi/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace takagi {

int sign(ScaledQuad v) {
  const int sa = (v.a > 0) - (v.a < 0);
  const int sb = (v.b > 0) - (v.b < 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const __int128 a2 = static_cast<__int128>(v.a) * v.a;
  const __int128 b2 = 2 * static_cast<__int128>(v.b) * v.b;
  return a2 > b2 ? sa : sb;
}

int compare(ScaledQuad u, ScaledQuad v) { return sign(u - v); }

double approx(ScaledQuad v) {
  return static_cast<double>(v.a) + static_cast<double>(v.b) * std::sqrt(2.0);
}

QuadValue to_quad(ScaledQuad v, unsigned level) {
  const Integer den = pow2_integer(level);
  return {make_rational(Integer(static_cast<long>(v.a)), den),
          make_rational(Integer(static_cast<long>(v.b)), den)};
}

GridSamples::GridSamples(unsigned level, std::vector<ScaledQuad> values)
    : level_(level), values_(std::move(values)) {
  if (level_ > kMaxGridLevel) throw std::invalid_argument("grid level above " + std::to_string(kMaxGridLevel));
  if (values_.size() != (std::size_t{1} << level_) + 1) {
    throw std::invalid_argument("grid of level " + std::to_string(level_) + " needs 2^level + 1 samples");
  }
}

DyadicRational GridSamples::point(std::size_t j) const {
  return {Integer(static_cast<unsigned long>(j)), level_};
}

namespace {

void require_same_level(const GridSamples& x, const GridSamples& y) {
  if (x.level() != y.level()) throw std::invalid_argument("grid samples have different levels");
}

}  // namespace

GridSamples operator+(const GridSamples& x, const GridSamples& y) {
  require_same_level(x, y);
  std::vector<ScaledQuad> v(x.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = x[j] + y[j];
  return {x.level(), std::move(v)};
}

GridSamples operator-(const GridSamples& x, const GridSamples& y) {
  require_same_level(x, y);
  std::vector<ScaledQuad> v(x.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = x[j] - y[j];
  return {x.level(), std::move(v)};
}

GridSamples operator-(const GridSamples& x) {
  std::vector<ScaledQuad> v(x.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = -x[j];
  return {x.level(), std::move(v)};
}

GridSamples sample_grid(const TakagiFunction& x, unsigned level) {
  if (level > kMaxGridLevel) {
    throw std::invalid_argument("grid level " + std::to_string(level) + " above " +
                                std::to_string(kMaxGridLevel));
  }
  x.scheme().require_depth(level);
  const std::size_t count = (std::size_t{1} << level) + 1;
  std::vector<ScaledQuad> v(count);
  // Generation n fills the odd multiples of stride/2, where stride = 2^{level-n}.
  // The wedge height 2^{-(n+2)/2}, scaled by 2^level, is 2^{level-1-n/2} for
  // even n and 2^{level-(n+3)/2} sqrt 2 for odd n.
  for (unsigned n = 0; n < level; ++n) {
    const std::size_t stride = std::size_t{1} << (level - n);
    const std::size_t half = stride / 2;
    const bool rational_height = (n % 2 == 0);
    const std::int64_t height = std::int64_t{1} << (rational_height ? level - 1 - n / 2 : level - (n + 3) / 2);
    std::int64_t k = 0;
    for (std::size_t left = 0; left + stride < count; left += stride, ++k) {
      const ScaledQuad& l = v[left];
      const ScaledQuad& r = v[left + stride];
      ScaledQuad mid{(l.a + r.a) / 2, (l.b + r.b) / 2};
      const std::int64_t h = x.coefficient(n, k) > 0 ? height : -height;
      if (rational_height) {
        mid.a += h;
      } else {
        mid.b += h;
      }
      v[left + half] = mid;
    }
  }
  return {level, std::move(v)};
}

GridSamples sample_function(unsigned level, const std::function<QuadValue(const DyadicRational&)>& f) {
  if (level > kMaxGridLevel) throw std::invalid_argument("grid level above " + std::to_string(kMaxGridLevel));
  const std::size_t count = (std::size_t{1} << level) + 1;
  const Integer scale = pow2_integer(level);
  std::vector<ScaledQuad> v(count);
  for (std::size_t j = 0; j < count; ++j) {
    const QuadValue q = f(DyadicRational(Integer(static_cast<unsigned long>(j)), level));
    const Rational a = q.rational_part() * scale;
    const Rational b = q.sqrt2_part() * scale;
    if (a.get_den() != 1 || b.get_den() != 1 || !a.get_num().fits_slong_p() || !b.get_num().fits_slong_p()) {
      throw std::invalid_argument("sample value " + q.to_string() + " is not in 2^-" +
                                  std::to_string(level) + " Z[sqrt 2]");
    }
    v[j] = {a.get_num().get_si(), b.get_num().get_si()};
  }
  return {level, std::move(v)};
}

std::size_t grid_index(const DyadicRational& t, unsigned n) {
  if (n > kMaxGridLevel) throw std::invalid_argument("grid level above " + std::to_string(kMaxGridLevel));
  if (sgn(t.numerator()) < 0 || t > DyadicRational(Integer(1), 0)) {
    throw std::invalid_argument("t = " + t.to_string() + " lies outside [0, 1]");
  }
  if (!t.on_grid(n)) {
    throw std::invalid_argument("t = " + t.to_string() + " is not on the level-" + std::to_string(n) + " grid");
  }
  return static_cast<std::size_t>(t.index_at(n).get_ui());
}

}  // namespace takagi
