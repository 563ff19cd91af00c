#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tra/hamiltonian.hpp"

namespace tra::cli {

enum class OutputFormat { csv, json };

/// Everything a subcommand needs; validated before any computation.
struct RunConfig {
  double N = 1.0;
  double lambda = 1.0;
  int size = 5;
  ExpansionMode mode = ExpansionMode::corrected;
  std::optional<int> quad_nodes;
  double tol_real = 1e-8;
  double x_max = 0.0;  // 0: max(4, 6 / lambda)
  int points = 401;
  std::string output;  // empty: $TRA_OUTPUT_DIR/<command>.<ext>, else stdout
  std::optional<OutputFormat> format;
  int level = 0;
  bool compare = false;
  std::vector<double> exponents;

  /// Throws ParameterError / ModeError on the first problem found.
  void validate() const;
};

/// Exit codes: 0 success, 1 selftest failure, 2 configuration error,
/// 3 numeric non-convergence.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tra::cli
