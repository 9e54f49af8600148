#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace takagi::cli {

enum class Command { eval, sample, extrema, qv, cov, counterexample, modulus, witness, ito };
enum class OutputFormat { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitSchemeDepth = 3;

struct RunConfig {
  Command command = Command::eval;
  std::vector<std::string> schemes;  // empty: all_plus (cov: all_plus, alt_m)
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> grid;
  std::optional<unsigned> level;
  std::optional<unsigned> levels;
  std::optional<std::string> t;
  std::optional<std::string> h;
  std::optional<std::string> tol;
  std::optional<std::string> poly;
  std::optional<std::size_t> stride;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::csv;
};

/// Parses argv into a RunConfig. On failure writes a diagnostic to err and
/// returns nullopt with exit_code set (0 for --help, 2 otherwise).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Executes a config; the artifact goes to config.out or, when unset, to out.
/// Returns 0 on success, 2 on invalid configuration, 3 on scheme-depth errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace takagi::cli
