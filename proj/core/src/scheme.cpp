#include "takagi/scheme.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace takagi {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t coefficient_hash(std::uint64_t seed, unsigned m, std::int64_t k) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(m));
  return splitmix64(h ^ static_cast<std::uint64_t>(k));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<std::string_view> split(std::string_view s, char sep, std::size_t max_parts) {
  std::vector<std::string_view> parts;
  while (parts.size() + 1 < max_parts) {
    const auto pos = s.find(sep);
    if (pos == std::string_view::npos) break;
    parts.push_back(s.substr(0, pos));
    s.remove_prefix(pos + 1);
  }
  parts.push_back(s);
  return parts;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  try {
    return std::stoull(std::string(s));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument(std::string(what) + " out of range: '" + std::string(s) + "'");
  }
}

}  // namespace

CoefficientScheme CoefficientScheme::all_plus() { return CoefficientScheme(AllPlus{}); }
CoefficientScheme CoefficientScheme::alt_m() { return CoefficientScheme(AltM{}); }
CoefficientScheme CoefficientScheme::alt_mk() { return CoefficientScheme(AltMK{}); }

CoefficientScheme CoefficientScheme::block(unsigned period) {
  if (period == 0) throw std::invalid_argument("block period must be positive");
  return CoefficientScheme(Block{period});
}

CoefficientScheme CoefficientScheme::half_split() { return CoefficientScheme(HalfSplit{+1}); }
CoefficientScheme CoefficientScheme::neg_half_split() { return CoefficientScheme(HalfSplit{-1}); }

CoefficientScheme CoefficientScheme::bernoulli(Rational p_plus, std::uint64_t seed) {
  p_plus.canonicalize();
  if (sgn(p_plus) < 0 || cmp(p_plus, 1) > 0) {
    throw std::invalid_argument("bernoulli probability must lie in [0, 1], got " + p_plus.get_str());
  }
  // ceil(p * 2^64) without overflow: p <= 1 so the result is at most 2^64.
  Integer scaled = p_plus.get_num() * pow2_integer(64);
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), p_plus.get_den_mpz_t());
  unsigned __int128 threshold = 0;
  if (q == pow2_integer(64)) {
    threshold = static_cast<unsigned __int128>(1) << 64;
  } else {
    threshold = static_cast<std::uint64_t>(q.get_ui());
  }
  return CoefficientScheme(Bernoulli{std::move(p_plus), seed, threshold});
}

CoefficientScheme CoefficientScheme::explicit_table(std::vector<std::vector<std::int8_t>> rows) {
  for (std::size_t m = 0; m < rows.size(); ++m) {
    if (rows[m].size() != (std::size_t{1} << m)) {
      throw std::invalid_argument("explicit scheme generation " + std::to_string(m) +
                                  " must hold 2^m coefficients");
    }
    for (auto s : rows[m]) {
      if (s != 1 && s != -1) throw std::invalid_argument("explicit coefficients must be +1 or -1");
    }
  }
  return CoefficientScheme(Explicit{std::move(rows)});
}

SchemeKind CoefficientScheme::kind() const {
  return std::visit(overloaded{
                        [](const AllPlus&) { return SchemeKind::all_plus; },
                        [](const AltM&) { return SchemeKind::alt_m; },
                        [](const AltMK&) { return SchemeKind::alt_mk; },
                        [](const Block&) { return SchemeKind::block; },
                        [](const HalfSplit& h) {
                          return h.sign > 0 ? SchemeKind::half_split : SchemeKind::neg_half_split;
                        },
                        [](const Bernoulli&) { return SchemeKind::bernoulli; },
                        [](const Explicit&) { return SchemeKind::explicit_table; },
                    },
                    rule_);
}

int CoefficientScheme::coefficient(unsigned m, std::int64_t k) const {
  if (m >= 63 || k < 0 || k >= (std::int64_t{1} << m)) {
    throw std::out_of_range("coefficient index (" + std::to_string(m) + ", " + std::to_string(k) +
                            ") outside 0 <= k < 2^m");
  }
  return std::visit(
      overloaded{
          [](const AllPlus&) { return 1; },
          [m](const AltM&) { return (m % 2 == 0) ? 1 : -1; },
          [m, k](const AltMK&) { return ((m + static_cast<std::uint64_t>(k)) % 2 == 0) ? 1 : -1; },
          [m](const Block& b) { return ((m / b.period) % 2 == 0) ? 1 : -1; },
          [m, k](const HalfSplit& h) {
            const bool left = (m == 0) || k < (std::int64_t{1} << (m - 1));
            return left ? h.sign : -h.sign;
          },
          [m, k](const Bernoulli& b) {
            return coefficient_hash(b.seed, m, k) < b.threshold ? 1 : -1;
          },
          [m, k](const Explicit& e) -> int {
            if (m >= e.rows.size()) {
              throw SchemeDepthError("explicit scheme has depth " + std::to_string(e.rows.size()) +
                                     ", generation " + std::to_string(m) + " requested");
            }
            return e.rows[m][static_cast<std::size_t>(k)];
          },
      },
      rule_);
}

std::optional<unsigned> CoefficientScheme::depth() const {
  if (const auto* e = std::get_if<Explicit>(&rule_)) return static_cast<unsigned>(e->rows.size());
  return std::nullopt;
}

void CoefficientScheme::require_depth(unsigned n) const {
  if (const auto d = depth(); d && n > *d) {
    throw SchemeDepthError("explicit scheme has depth " + std::to_string(*d) + ", " +
                           std::to_string(n) + " generations required");
  }
}

std::string CoefficientScheme::spec() const {
  return std::visit(overloaded{
                        [](const AllPlus&) -> std::string { return "all_plus"; },
                        [](const AltM&) -> std::string { return "alt_m"; },
                        [](const AltMK&) -> std::string { return "alt_mk"; },
                        [](const Block& b) { return "block:" + std::to_string(b.period); },
                        [](const HalfSplit& h) -> std::string {
                          return h.sign > 0 ? "half_split" : "neg_half_split";
                        },
                        [](const Bernoulli& b) {
                          return "bernoulli:" + b.p_plus.get_str() + ":" + std::to_string(b.seed);
                        },
                        [](const Explicit& e) { return "explicit:" + std::to_string(e.rows.size()); },
                    },
                    rule_);
}

CoefficientScheme parse_scheme(std::string_view spec, std::optional<std::uint64_t> default_seed) {
  const auto parts = split(spec, ':', spec.starts_with("file:") ? 2 : 3);
  const std::string_view name = parts[0];
  auto expect_params = [&](std::size_t lo, std::size_t hi) {
    const std::size_t n = parts.size() - 1;
    if (n < lo || n > hi) {
      throw std::invalid_argument("wrong number of parameters in scheme '" + std::string(spec) + "'");
    }
  };
  if (name == "all_plus") {
    expect_params(0, 0);
    return CoefficientScheme::all_plus();
  }
  if (name == "alt_m") {
    expect_params(0, 0);
    return CoefficientScheme::alt_m();
  }
  if (name == "alt_mk") {
    expect_params(0, 0);
    return CoefficientScheme::alt_mk();
  }
  if (name == "half_split") {
    expect_params(0, 0);
    return CoefficientScheme::half_split();
  }
  if (name == "neg_half_split") {
    expect_params(0, 0);
    return CoefficientScheme::neg_half_split();
  }
  if (name == "block") {
    expect_params(1, 1);
    const auto period = parse_u64(parts[1], "block period");
    if (period == 0 || period > 1'000'000) throw std::invalid_argument("block period must be in [1, 10^6]");
    return CoefficientScheme::block(static_cast<unsigned>(period));
  }
  if (name == "bernoulli") {
    expect_params(1, 2);
    const Rational p = parse_rational(parts[1]);
    std::uint64_t seed = 0;
    if (parts.size() == 3) {
      seed = parse_u64(parts[2], "bernoulli seed");
    } else if (default_seed) {
      seed = *default_seed;
    } else {
      throw std::invalid_argument("bernoulli scheme needs a seed: bernoulli:P:SEED or --seed");
    }
    return CoefficientScheme::bernoulli(p, seed);
  }
  if (name == "file") {
    expect_params(1, 1);
    return load_explicit_scheme(std::string(parts[1]));
  }
  throw std::invalid_argument("unknown scheme '" + std::string(spec) + "'");
}

CoefficientScheme read_explicit_scheme(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<unsigned> depth;
  std::vector<std::vector<std::int8_t>> rows;
  std::size_t filled = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("explicit scheme line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!depth) {
      std::string keyword;
      long long d = -1;
      std::string extra;
      if (!(fields >> keyword >> d) || keyword != "depth" || (fields >> extra)) fail("expected 'depth D'");
      if (d < 0 || d > 24) fail("depth must be in [0, 24]");
      depth = static_cast<unsigned>(d);
      for (unsigned m = 0; m < *depth; ++m) rows.emplace_back(std::size_t{1} << m, std::int8_t{0});
      continue;
    }
    long long m = -1;
    long long k = -1;
    std::string s;
    std::string extra;
    if (!(fields >> m >> k >> s) || (fields >> extra)) fail("expected 'm k s'");
    if (m < 0 || m >= static_cast<long long>(*depth)) fail("generation out of range");
    if (k < 0 || k >= (1LL << m)) fail("translate out of range");
    std::int8_t sign = 0;
    if (s == "+1" || s == "1") {
      sign = 1;
    } else if (s == "-1") {
      sign = -1;
    } else {
      fail("coefficient must be +1 or -1");
    }
    auto& slot = rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
    if (slot != 0) fail("duplicate entry");
    slot = sign;
    ++filled;
  }
  if (!depth) throw std::invalid_argument("explicit scheme: missing 'depth D' header");
  if (filled != (std::size_t{1} << *depth) - 1) {
    throw std::invalid_argument("explicit scheme: every (m, k) with m < depth must be listed");
  }
  return CoefficientScheme::explicit_table(std::move(rows));
}

CoefficientScheme load_explicit_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file '" + path + "'");
  return read_explicit_scheme(in);
}

void write_explicit_scheme(std::ostream& out, const CoefficientScheme& scheme, unsigned depth) {
  scheme.require_depth(depth);
  out << "depth " << depth << '\n';
  for (unsigned m = 0; m < depth; ++m) {
    for (std::int64_t k = 0; k < (std::int64_t{1} << m); ++k) {
      out << m << ' ' << k << ' ' << (scheme.coefficient(m, k) > 0 ? "+1" : "-1") << '\n';
    }
  }
}

std::vector<CoefficientScheme> builtin_schemes() {
  return {
      CoefficientScheme::all_plus(),
      CoefficientScheme::alt_m(),
      CoefficientScheme::alt_mk(),
      CoefficientScheme::block(5),
      CoefficientScheme::half_split(),
      CoefficientScheme::neg_half_split(),
      CoefficientScheme::bernoulli(Rational(1, 2), 1),
      CoefficientScheme::bernoulli(Rational(1, 4), 1),
  };
}

}  // namespace takagi
