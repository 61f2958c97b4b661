#ifndef OCMG_TOOLS_CLI_HPP
#define OCMG_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ocmg::cli {

enum ExitCode : int
{
  kOk = 0,
  kValidationError = 1,
  kSolverFailure = 2,
};

/// Parameters of one CLI invocation, filled from flags and/or a config file
/// whose keys are the long flag names.
struct ExperimentConfig
{
  std::string command;  // lfa | mg | ssn | repro
  std::string scheme = "cjr";
  int q = 2;
  int N = 256;
  double h = 1.0 / 256.0;
  double alpha = 1e-6;
  double beta = 1e-3;
  double u0 = -30.0;
  double u1 = 30.0;
  std::string cycle = "W";
  int nu = 1;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  int pcg_iters = 2;
  std::string out;
  std::string target;  // repro: table1 | table2 | sweep
  std::string config_path;  // consumed during parsing; always empty afterwards

  friend bool operator==(const ExperimentConfig &, const ExperimentConfig &) = default;
};

/// Parses argv (without the program name). Throws CLI11 parse errors.
ExperimentConfig parse_args(const std::vector<std::string> &args);

/// Throws std::invalid_argument when a precondition of the command fails.
void validate(const ExperimentConfig &cfg);

/// Runs a parsed, validated command. Returns an ExitCode.
int run(const ExperimentConfig &cfg, std::ostream &out, std::ostream &err);

/// Full entry point: parse, validate, dispatch, map errors to exit codes.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Worker count for repro from OCMG_WORKERS (default: hardware concurrency).
unsigned worker_count();

} // namespace ocmg::cli

#endif // OCMG_TOOLS_CLI_HPP
