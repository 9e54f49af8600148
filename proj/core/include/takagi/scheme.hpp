#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "takagi/exact.hpp"

namespace takagi {

/// Raised when a coefficient beyond the stored depth of an explicit scheme is
/// needed. Evaluation never zero-fills missing generations.
class SchemeDepthError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class SchemeKind {
  all_plus,        // theta = +1 everywhere
  alt_m,           // (-1)^m
  alt_mk,          // (-1)^(m+k)
  block,           // (-1)^floor(m/p)
  half_split,      // +1 on the left half of each generation, -1 on the right
  neg_half_split,  // negative of half_split
  bernoulli,       // i.i.d. +1 with probability p, keyed on (seed, m, k)
  explicit_table,  // finite table read from a file
};

/// A rule (m, k) -> theta_{m,k} in {-1, +1}, for 0 <= k < 2^m.
class CoefficientScheme {
 public:
  static CoefficientScheme all_plus();
  static CoefficientScheme alt_m();
  static CoefficientScheme alt_mk();
  static CoefficientScheme block(unsigned period);
  static CoefficientScheme half_split();
  static CoefficientScheme neg_half_split();
  /// p_plus must lie in [0, 1].
  static CoefficientScheme bernoulli(Rational p_plus, std::uint64_t seed);
  /// rows[m] holds 2^m entries, each +1 or -1, for m < rows.size().
  static CoefficientScheme explicit_table(std::vector<std::vector<std::int8_t>> rows);

  SchemeKind kind() const;

  /// Throws std::out_of_range when k is outside [0, 2^m) and SchemeDepthError
  /// for explicit tables queried at m >= depth.
  int coefficient(unsigned m, std::int64_t k) const;

  /// Number of stored generations for explicit tables; nullopt when unbounded.
  std::optional<unsigned> depth() const;

  /// Throws SchemeDepthError unless generations 0..n-1 are all available.
  void require_depth(unsigned n) const;

  /// Scheme string in the `name[:param[:param]]` grammar. Explicit tables have
  /// no source path attached and report "explicit:<depth>".
  std::string spec() const;

 private:
  struct AllPlus {};
  struct AltM {};
  struct AltMK {};
  struct Block {
    unsigned period;
  };
  struct HalfSplit {
    int sign;
  };
  struct Bernoulli {
    Rational p_plus;
    std::uint64_t seed;
    // theta = +1 iff hash < threshold, threshold = ceil(p_plus * 2^64)
    unsigned __int128 threshold;
  };
  struct Explicit {
    std::vector<std::vector<std::int8_t>> rows;
  };
  using Rule = std::variant<AllPlus, AltM, AltMK, Block, HalfSplit, Bernoulli, Explicit>;

  explicit CoefficientScheme(Rule rule) : rule_(std::move(rule)) {}

  Rule rule_;
};

/// Parses `name[:param[:param]]`: all_plus, alt_m, alt_mk, block:P,
/// half_split, neg_half_split, bernoulli:P[:SEED], file:PATH.
/// `default_seed` is used when a bernoulli spec omits its seed.
CoefficientScheme parse_scheme(std::string_view spec,
                               std::optional<std::uint64_t> default_seed = std::nullopt);

/// Explicit-scheme text format: a `depth D` header followed by one `m k s`
/// line per coefficient, s in {+1, -1}. Every (m, k) with m < D must appear
/// exactly once. Blank lines and lines starting with '#' are ignored.
CoefficientScheme read_explicit_scheme(std::istream& in);
CoefficientScheme load_explicit_scheme(const std::string& path);
void write_explicit_scheme(std::ostream& out, const CoefficientScheme& scheme, unsigned depth);

/// The named closed-form schemes plus bernoulli:1/2:1 and bernoulli:1/4:1.
std::vector<CoefficientScheme> builtin_schemes();

}  // namespace takagi
