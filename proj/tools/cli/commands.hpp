#pragma once

#include <iosfwd>

#include "bessellab/parallel.hpp"
#include "cli/report.hpp"
#include "cli/run_config.hpp"

namespace bessellab::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kDomain = 2,
  kNumerical = 3,
  kInternal = 70,
  kIo = 74,
  kUsage = 64,
};

// Flag first, then BESSELLAB_THREADS, then 0 (available parallelism).
Exec resolve_exec(const RunConfig& cfg);

// Validates and runs one command. Library exceptions propagate.
Report execute(const RunConfig& cfg);

// Whole command line: parsing, execution, output files, error JSON and the
// exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bessellab::cli
