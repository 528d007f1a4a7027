#pragma once

// Command-line front end. `run` is the whole program minus process exit so it
// can be driven from tests.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qudalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification or expectation failure, non-convergence
inline constexpr int kExitUsage = 2;   // usage, format or I/O error

/// Overrides the default tolerance of every command when set.
inline constexpr const char* kToleranceEnv = "QUDALG_TOLERANCE";

enum class OutputFormat { structured, tabular };

struct RunConfig {
  std::string command;
  std::optional<int> l;
  std::optional<int> n;
  std::string set_name;
  std::optional<double> tolerance;
  OutputFormat format = OutputFormat::structured;
  std::string input_path;
  std::string output_path;
  bool normalized = false;
  bool expect_universal = false;
  // closure
  std::string mode = "real-antihermitian";
  int max_rounds = 100;
  bool allow_large = false;
  std::string basis_out;
  // apply
  std::string gate_path;
  std::vector<int> targets;
  std::vector<int> basis_digits;
};

struct CheckResult {
  std::string name;
  std::string identity;  // the relation being checked, for traceability
  int l = 0;
  int n = 0;
  double max_residual = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass = true;  // conjunction of every check
};

/// Runs every identity suite for each (l, n) pair.
VerifyReport verify(const std::vector<int>& ls, const std::vector<int>& ns, double tolerance);

std::string render(const VerifyReport& report, OutputFormat format);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qudalg::cli
