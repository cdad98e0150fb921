#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "minlen/minlen.h"

namespace minlen::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitNumerical = 3,
};

struct RunConfig {
  std::vector<double> delta_x_min{1e-16};  // meters unless atomic_units
  bool atomic_units = false;
  std::vector<double> eta{1.0};
  std::vector<int> n;  // empty: command default
  int l = 1;
  int m = 1;
  int n_max = 12;
  int samples = 21;  // eta samples for figure1
  std::string format = "csv";
  std::string out;  // empty: the stream passed to the command
  double epsilon_bohr = 2.5e-8;
  int grid_nodes = 0;  // 0: library default (MINLEN_GRID_NODES or 200)
  bool header_timestamp = true;
};

// Tolerances reported and enforced by flux-check.
inline constexpr double kMomentRelativeTolerance = 1e-8;
inline constexpr double kCrossTermTolerance = 1e-9;  // in Bohr magnetons
inline constexpr double kDivergenceTolerance = 1e-12;

// Library errors in numerical evaluation map to kExitNumerical, all others
// to kExitValidation.
int exit_code_for(minlen_status status);

// Accepts decimals and simple fractions such as "1/3".
double parse_number(const std::string& text);

int cmd_varsigma(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_figure1(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_flux_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_matrix(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace minlen::cli
