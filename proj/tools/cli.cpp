#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "takagi/csv.hpp"
#include "takagi/extrema.hpp"
#include "takagi/follmer.hpp"
#include "takagi/grid.hpp"
#include "takagi/modulus.hpp"
#include "takagi/quadvar.hpp"
#include "takagi/scheme.hpp"
#include "takagi/takagi_function.hpp"

namespace takagi::cli {

namespace {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const char* command_help(Command c) {
  switch (c) {
    case Command::eval: return "Value x(t): exact at dyadic and thirds points, certified otherwise";
    case Command::sample: return "All values on the level-N dyadic grid";
    case Command::extrema: return "Exact max, min and oscillation on the level-N grid";
    case Command::qv: return "Quadratic variation <x>^n_t at one t or as a profile";
    case Command::cov: return "Covariation, both variations and <x+y>^n_t";
    case Command::counterexample: return "Even/odd level series of <x-hat, y> and <x-hat + y>";
    case Command::modulus: return "Exact modulus-of-continuity scan against omega(h)";
    case Command::witness: return "Witness increments attaining the modulus bounds";
    case Command::ito: return "Follmer sum and Ito-formula residual for a polynomial";
  }
  return "";
}

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names{
      {"eval", Command::eval},       {"sample", Command::sample},
      {"extrema", Command::extrema}, {"qv", Command::qv},
      {"cov", Command::cov},         {"counterexample", Command::counterexample},
      {"modulus", Command::modulus}, {"witness", Command::witness},
      {"ito", Command::ito},
  };
  return names;
}

std::string command_name(Command c) {
  for (const auto& [name, cmd] : command_names()) {
    if (cmd == c) return name;
  }
  return "unknown";
}

unsigned require_in(const std::optional<unsigned>& v, const char* flag, unsigned lo, unsigned hi) {
  if (!v) throw ConfigError(std::string("missing required flag ") + flag);
  if (*v < lo || *v > hi) {
    throw ConfigError(std::string(flag) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return *v;
}

Rational parse_fraction(const std::optional<std::string>& text, const char* flag, const char* fallback) {
  if (!text && !fallback) throw ConfigError(std::string("missing required flag ") + flag);
  try {
    return parse_rational(text ? *text : fallback);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
}

DyadicRational parse_grid_time(const std::optional<std::string>& text, const char* flag, unsigned level) {
  const Rational q = parse_fraction(text, flag, "1");
  if (sgn(q) < 0 || cmp(q, 1) > 0) throw ConfigError(std::string(flag) + " must lie in [0, 1]");
  DyadicRational t;
  try {
    t = DyadicRational::from_rational(q);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
  if (!t.on_grid(level)) {
    throw ConfigError(std::string(flag) + " = " + q.get_str() + " is not on the level-" + std::to_string(level) +
                      " grid");
  }
  return t;
}

// Both schemes are parsed before any computation so that bad specs fail fast.
std::vector<CoefficientScheme> parse_schemes(const RunConfig& c) {
  std::vector<std::string> specs = c.schemes;
  const std::size_t allowed = (c.command == Command::cov) ? 2 : 1;
  if (specs.size() > allowed) {
    throw ConfigError(command_name(c.command) + " accepts at most " + std::to_string(allowed) + " --scheme");
  }
  if (specs.empty()) specs.emplace_back("all_plus");
  if (c.command == Command::cov && specs.size() == 1) specs.emplace_back("alt_m");
  std::vector<CoefficientScheme> out;
  for (const auto& s : specs) {
    try {
      out.push_back(parse_scheme(s, c.seed));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("--scheme: ") + e.what());
    }
  }
  return out;
}

std::string fraction(const Rational& q) { return q.get_str(); }

// --- commands ---------------------------------------------------------------

Table run_eval(const RunConfig& c, const TakagiFunction& x) {
  const Rational t = parse_fraction(c.t, "--t", nullptr);
  if (sgn(t) < 0 || cmp(t, 1) > 0) throw ConfigError("--t must lie in [0, 1]");
  const Rational tol = parse_fraction(c.tol, "--tol", "1/1000000000000");
  if (sgn(tol) <= 0) throw ConfigError("--tol must be positive");

  QuadValue value;
  QuadValue bound;
  std::string method;
  const Integer& den = t.get_den();
  const unsigned long twos = mpz_scan1(den.get_mpz_t(), 0);
  const SchemeKind kind = x.scheme().kind();
  const bool thirds_kind = kind == SchemeKind::all_plus || kind == SchemeKind::half_split ||
                           kind == SchemeKind::neg_half_split;
  if (den == pow2_integer(twos)) {
    value = x.eval_dyadic(DyadicRational::from_rational(t));
    method = "dyadic";
  } else if (thirds_kind && den == 3 * pow2_integer(twos)) {
    value = eval_thirds(x, t);
    method = "thirds";
  } else {
    const ApproxValue a = x.eval_approx(t, tol);
    value = a.value;
    bound = a.bound;
    method = "approx";
  }
  Table table{{"t_num", "t_den", "value_a_num", "value_a_den", "value_b_num", "value_b_den", "value_decimal",
               "method", "bound_decimal"},
              {}};
  table.rows.push_back({t.get_num().get_str(), t.get_den().get_str(), value.rational_part().get_num().get_str(),
                        value.rational_part().get_den().get_str(), value.sqrt2_part().get_num().get_str(),
                        value.sqrt2_part().get_den().get_str(), quad_to_decimal(value, kCsvDigits), method,
                        quad_to_decimal(bound, kCsvDigits)});
  return table;
}

Table run_sample(const RunConfig& c, const TakagiFunction& x) {
  const unsigned n = require_in(c.grid, "--grid", 0, 22);
  const GridSamples samples = sample_grid(x, n);
  Table table{{"t", "value_decimal", "value_a", "value_b"}, {}};
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const QuadValue v = samples.value(j);
    table.rows.push_back({samples.point(j).to_string(), quad_to_decimal(v, kCsvDigits),
                          fraction(v.rational_part()), fraction(v.sqrt2_part())});
  }
  return table;
}

Table run_extrema(const RunConfig& c, const TakagiFunction& x) {
  const unsigned n = require_in(c.grid, "--grid", 1, 24);
  const ExtremaReport r = grid_extrema(x, n);
  auto join = [](const std::vector<DyadicRational>& pts) {
    std::string s;
    for (const auto& p : pts) s += (s.empty() ? "" : ";") + p.to_string();
    return s;
  };
  Table table{{"level", "quantity", "value_a", "value_b", "value_decimal", "points"}, {}};
  auto row = [&](const char* name, const QuadValue& v, const std::string& pts) {
    table.rows.push_back({std::to_string(n), name, fraction(v.rational_part()), fraction(v.sqrt2_part()),
                          quad_to_decimal(v, kCsvDigits), pts});
  };
  row("max", r.max, join(r.argmax));
  row("min", r.min, join(r.argmin));
  row("oscillation", r.oscillation, "");
  return table;
}

Table run_qv(const RunConfig& c, const TakagiFunction& x) {
  const unsigned n = require_in(c.level, "--level", 1, 26);
  if (c.t) {
    if (c.stride) throw ConfigError("--stride and --t are mutually exclusive");
    const DyadicRational t = parse_grid_time(c.t, "--t", n);
    QVSeries s{SeriesTag::qv, {{n, t, qv_approx(x, n, t), std::nullopt}}};
    return qv_table(s);
  }
  const std::size_t stride = c.stride.value_or(1);
  if (stride == 0 || ((std::size_t{1} << n) % stride) != 0) throw ConfigError("--stride must divide 2^level");
  return qv_table(qv_profile(x, n, stride));
}

Table run_cov(const RunConfig& c, const TakagiFunction& x, const TakagiFunction& y) {
  const unsigned n = require_in(c.level, "--level", 1, 26);
  const DyadicRational t = parse_grid_time(c.t, "--t", n);
  const GridSamples xs = sample_grid(x, n);
  const GridSamples ys = sample_grid(y, n);
  Table table{base_columns(), {}};
  table.columns.insert(table.columns.begin(), "kind");
  const Rational tr = t.to_rational();
  auto row = [&](const char* kind, const QuadValue& v) {
    auto cells = base_cells(n, tr, v);
    cells.insert(cells.begin(), kind);
    table.rows.push_back(std::move(cells));
  };
  row("covariation", covariation(xs, ys, n, t));
  row("qv_x", quadratic_variation(xs, n, t));
  row("qv_y", quadratic_variation(ys, n, t));
  row("qv_of_sum", quadratic_variation(xs + ys, n, t));
  return table;
}

Table run_counterexample(const RunConfig& c) {
  const unsigned n_max = require_in(c.levels, "--levels", 1, 28);
  const DyadicRational t = parse_grid_time(c.t, "--t", n_max);
  return counterexample_table(counterexample_series(n_max, t));
}

Table run_modulus(const RunConfig& c, const TakagiFunction& x) {
  if (c.h) {
    const unsigned n = require_in(c.grid, "--grid", 1, 24);
    const DyadicRational h = parse_grid_time(c.h, "--h", n);
    if (sgn(h.numerator()) == 0) throw ConfigError("--h must be positive");
    return modulus_table(n, {modulus_scan(x, n, h)});
  }
  const unsigned n = require_in(c.grid, "--grid", 1, 14);
  return modulus_table(n, modulus_scan_all(sample_grid(x, n)));
}

Table run_witness(const RunConfig& c) {
  const unsigned n = require_in(c.levels ? c.levels : std::optional<unsigned>(12), "--levels", 1, kMaxWitnessLevel);
  Table table = witness_table();
  append_witness_rows(table, WitnessKind::part_a, witness_ratios(WitnessKind::part_a, 1, n));
  append_witness_rows(table, WitnessKind::part_b, witness_ratios(WitnessKind::part_b, 1, n));
  return table;
}

Table run_ito(const RunConfig& c, const TakagiFunction& x) {
  const unsigned n = require_in(c.level, "--level", 1, 22);
  if (!c.poly) throw ConfigError("missing required flag --poly");
  RationalPolynomial f;
  try {
    f = RationalPolynomial::parse(*c.poly);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--poly: ") + e.what());
  }
  const DyadicRational t = parse_grid_time(c.t, "--t", n);
  const GridSamples xs = sample_grid(x, n);
  Table table{base_columns(), {}};
  table.columns.insert(table.columns.begin(), "kind");
  const Rational tr = t.to_rational();
  auto row = [&](const char* kind, const QuadValue& v) {
    auto cells = base_cells(n, tr, v);
    cells.insert(cells.begin(), kind);
    table.rows.push_back(std::move(cells));
  };
  row("follmer_sum", follmer_sum(f.derivative(), xs, n, t));
  row("residual", ito_residual(f, xs, n, t));
  return table;
}

Table dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::counterexample: return run_counterexample(c);
    case Command::witness: return run_witness(c);
    default: break;
  }
  const auto schemes = parse_schemes(c);
  const TakagiFunction x(schemes.front());
  switch (c.command) {
    case Command::eval: return run_eval(c, x);
    case Command::sample: return run_sample(c, x);
    case Command::extrema: return run_extrema(c, x);
    case Command::qv: return run_qv(c, x);
    case Command::cov: return run_cov(c, x, TakagiFunction(schemes.at(1)));
    case Command::modulus: return run_modulus(c, x);
    case Command::ito: return run_ito(c, x);
    default: throw ConfigError("unhandled command");
  }
}

nlohmann::ordered_json cell_json(const std::string& cell) {
  std::int64_t v = 0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (!cell.empty() && ec == std::errc() && ptr == last) return v;
  return cell;
}

void write_json(std::ostream& out, const RunConfig& c, const Table& table) {
  nlohmann::ordered_json doc;
  doc["command"] = command_name(c.command);
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < r.size(); ++i) obj[table.columns[i]] = cell_json(r[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  RunConfig config;
  CLI::App app{"Exact analysis of generalized Takagi functions with +-1 Faber-Schauder coefficients"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");

  std::string format = "csv";
  for (const auto& [name, cmd] : command_names()) {
    CLI::App* sub = app.add_subcommand(name, command_help(cmd));
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--scheme", config.schemes,
                    "Scheme name[:param[:param]]; repeat for cov (default all_plus)");
    sub->add_option("--seed", config.seed, "Seed for bernoulli schemes that omit one");
    sub->add_option("--grid", config.grid, "Grid level N for sample/extrema/modulus");
    sub->add_option("--level", config.level, "Partition level n for qv/cov/ito");
    sub->add_option("--levels", config.levels, "Highest level for counterexample/witness");
    sub->add_option("--t", config.t, "Time as an exact fraction num/den");
    sub->add_option("--h", config.h, "Step as an exact fraction num/den");
    sub->add_option("--tol", config.tol, "Tolerance for eval at non-exact points (fraction)");
    sub->add_option("--poly", config.poly, "Polynomial coefficients, constant first, e.g. 0,0,1");
    sub->add_option("--stride", config.stride, "Row stride for the qv profile");
    sub->add_option("--out", config.out, "Output path (default: standard output)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    exit_code = app.exit(e, out, err);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    exit_code = kExitInvalidConfig;
    return std::nullopt;
  }
  config.format = (format == "json") ? OutputFormat::json : OutputFormat::csv;
  exit_code = kExitOk;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Table table;
  try {
    table = dispatch(config);
  } catch (const SchemeDepthError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSchemeDepth;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  std::ostringstream buffer;
  if (config.format == OutputFormat::json) {
    write_json(buffer, config, table);
  } else {
    table.write_csv(buffer);
  }
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write '" << *config.out << "'\n";
      return kExitFailure;
    }
  } else {
    out << buffer.str();
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto config = parse_args(argc, argv, out, err, code);
  if (!config) return code;
  return run(*config, out, err);
}

}  // namespace takagi::cli
