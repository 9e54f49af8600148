#pragma once

// Exact samples of a function on the dyadic grid {j / 2^N : 0 <= j <= 2^N}.
//
// Every x in the class takes values (A + B sqrt 2) / 2^N on the level-N grid
// with integers A, B bounded by 2^{N+1}, so grid scans run on machine
// integers and only convert to QuadValue when reporting.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "takagi/exact.hpp"
#include "takagi/takagi_function.hpp"

namespace takagi {

inline constexpr unsigned kMaxGridLevel = 40;

/// (a + b sqrt 2) / 2^level; the level is carried by the owning GridSamples.
struct ScaledQuad {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend ScaledQuad operator+(ScaledQuad u, ScaledQuad v) { return {u.a + v.a, u.b + v.b}; }
  friend ScaledQuad operator-(ScaledQuad u, ScaledQuad v) { return {u.a - v.a, u.b - v.b}; }
  friend ScaledQuad operator-(ScaledQuad u) { return {-u.a, -u.b}; }
  friend bool operator==(ScaledQuad, ScaledQuad) = default;
};

/// Exact sign of a + b sqrt 2.
int sign(ScaledQuad v);
/// Exact three-way comparison: -1, 0 or +1.
int compare(ScaledQuad u, ScaledQuad v);
inline ScaledQuad abs(ScaledQuad v) { return sign(v) < 0 ? -v : v; }
double approx(ScaledQuad v);

QuadValue to_quad(ScaledQuad v, unsigned level);

class GridSamples {
 public:
  GridSamples(unsigned level, std::vector<ScaledQuad> values);

  unsigned level() const { return level_; }
  std::size_t size() const { return values_.size(); }
  std::span<const ScaledQuad> values() const { return values_; }
  const ScaledQuad& operator[](std::size_t j) const { return values_[j]; }
  QuadValue value(std::size_t j) const { return to_quad(values_[j], level_); }
  DyadicRational point(std::size_t j) const;

  friend GridSamples operator+(const GridSamples& x, const GridSamples& y);
  friend GridSamples operator-(const GridSamples& x, const GridSamples& y);
  friend GridSamples operator-(const GridSamples& x);

 private:
  unsigned level_;
  std::vector<ScaledQuad> values_;
};

/// x on the level-N grid, by midpoint refinement
/// x^{n+1}(mid) = (x^n(s) + x^n(s')) / 2 + theta_{n,k} 2^{-(n+2)/2}.
/// Throws std::invalid_argument for N > kMaxGridLevel and SchemeDepthError
/// when an explicit scheme is shallower than N.
GridSamples sample_grid(const TakagiFunction& x, unsigned level);

/// Samples an arbitrary function whose grid values lie in 2^{-N} Z[sqrt 2];
/// throws std::invalid_argument otherwise.
GridSamples sample_function(unsigned level,
                            const std::function<QuadValue(const DyadicRational&)>& f);

/// Validates t in [0, 1] on the level-n grid and returns its index.
std::size_t grid_index(const DyadicRational& t, unsigned n);

}  // namespace takagi
