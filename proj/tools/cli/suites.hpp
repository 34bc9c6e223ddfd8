#pragma once

#include <string>
#include <vector>

#include "bessellab/parallel.hpp"
#include "cli/report.hpp"
#include "cli/run_config.hpp"

namespace bessellab::cli {

// Sizes behind --grid quick|default|full.
struct GridPreset {
  std::size_t closed_xy = 20;  // closed-form kernel grid: x and y counts
  std::size_t closed_t = 10;
  std::size_t cross = 10;      // per-axis count of cross-method grids
  std::size_t sweep = 30;      // poisson bound / regime band
  std::size_t domination = 20;
  std::size_t conv_x = 9;
  int hl_cases = 20;
};

GridPreset grid_preset(const std::string& name);

const std::vector<std::string>& suite_names();

// Appends the suite's results and checks to the report.
void run_suite(const std::string& suite, const RunConfig& cfg, const Exec& exec, Report& report);

}  // namespace bessellab::cli
