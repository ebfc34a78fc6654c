#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace antilin::cli {

enum class ExitCode : int { ok = 0, math = 1, usage = 2, io = 3 };

enum class Subcommand { takagi, polar, spectrum, wvn, conj_basis, csym_approx,
                        random, check };

struct CliConfig {
  Subcommand subcommand = Subcommand::check;
  std::string input_path;
  std::string output_path;  // empty: standard output
  double epsilon = 0.05;
  double p = 2.0;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::optional<long> n;
  std::string kind = "selfadjoint_antilinear";  // for `random`
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// argv excludes the program name. `env_tol` is the value of ANTILIN_TOL,
/// which replaces the default tolerance unless --tol is given.
/// Throws UsageError.
CliConfig parse_args(const std::vector<std::string>& argv,
                     const std::optional<std::string>& env_tol = std::nullopt);

/// Runs one subcommand. JSON results and error objects go to the output
/// file (or `out`); human-readable diagnostics go to `diag`.
ExitCode run(const CliConfig& config, std::ostream& out, std::ostream& diag);

/// parse_args + run with usage errors mapped to exit code 2.
int main_entry(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& diag);

}  // namespace antilin::cli
