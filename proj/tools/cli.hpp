#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fecc/report.hpp"

namespace fecc::cli {

struct RunConfig {
  std::string command;  // element | verify | tensor | interp
  std::string m = "1";
  std::string n = "auto";
  std::string N = "2";
  std::optional<int> nu;
  std::vector<std::string> checks;
  std::string fixture;
  std::string emit = "all";
  std::string format = "json";
  std::string output;
  int quadrature_order = 0;  // 0: 2(n+2)
  int probe_degree = 0;      // 0: n+5 in 1D, n+3 per factor for tensors
  unsigned long seed = 1;
  int samples = 101;
  std::string input;
  std::string chi = "00";   // tensor samples: characteristic vector
  std::string index = "1,1";  // tensor samples: 1-based basis multi-index
  bool two_cell = false;
  bool with_matrices = false;
  bool timing = false;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::vector<double> seconds;  // per report, filled only when timing

  bool pass() const;
  int exit_status() const { return pass() ? 0 : 1; }
};

/// "3", "0..3" or "1,3,5". Throws InvalidParameter on bad syntax or a
/// reversed range.
std::vector<int> parse_int_list(const std::string& text);

/// (m, n) pairs in grid order. `n_spec` is a list as above, "auto"
/// (n = 2m+1) or "auto+K" (n = 2m+1 .. 2m+1+K). Throws InvalidParameter
/// when an explicit n is below 2m+1.
std::vector<std::pair<int, int>> parse_grid(const std::string& m_spec, const std::string& n_spec);

const std::vector<std::string>& known_checks();

/// Checks the config before any work is done; throws InvalidParameter.
void validate(const RunConfig& cfg);

SuiteResult run_verify(const RunConfig& cfg);

/// Executes the command, writing the artifact to `out` (or to the output
/// file). Returns the process exit status: 0 success, 1 failed
/// verification, 2 invalid input.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Path the artifact is written to: cfg.output, else a default name under
/// $FECC_OUTPUT_DIR, else empty for stdout.
std::string output_path(const RunConfig& cfg);

}  // namespace fecc::cli
