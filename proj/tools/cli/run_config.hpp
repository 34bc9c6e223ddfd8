#pragma once

// Parameters of one CLI run, filled from flags and/or a JSON config file.
// The report echoes the computational part under "inputs"; feeding that
// object back through config_from_json gives the same RunConfig.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace bessellab::cli {

// Unknown keys, wrong types, bad enum values: a usage error (exit 64).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OutputOptions {
  std::string json_path;  // empty: report goes to stdout
  std::string csv_path;   // empty: no table
  bool no_timings = false;
  int threads = 0;  // 0: BESSELLAB_THREADS, then available parallelism

  bool operator==(const OutputOptions&) const = default;
};

struct RunConfig {
  std::string command;

  std::string which = "heat";  // kernel, solve
  std::string method = "explicit";
  double lambda = 0.0;
  double t = 1.0;
  double x = 1.0;
  double y = 1.0;
  int quad_nodes = 64;
  double quad_max_error = 1e-8;

  std::string suite = "all";
  std::vector<double> lambda_set{0.0, 1.0};
  std::string grid = "default";
  double drift_limit = 0.05;

  std::string weight_class = "heat";
  double p = 2.0;
  double T = 1.0;
  std::string weight = "piece [0,inf): 1";
  int shells = 0;  // k_max of the shell table, 0 skips it
  double R = 2.0;  // shell radius factor, HL truncation
  double s = 0.5;

  std::string op = "heat";
  double a = 1.0;
  int t_nodes = 48;
  int refinement = 1;
  std::vector<double> xs{1.0};
  std::string data = "one";
  bool probe = false;
  std::string v = "piece [0,inf): 1";
  std::string u = "piece [0,inf): 1*(1+y)^-2";

  std::vector<double> t_schedule{0.25};
  std::vector<double> x_grid{1.0};

  OutputOptions output;

  bool operator==(const RunConfig&) const = default;
};

const std::vector<std::string>& commands();

// Computational keys of a command (without "command" and output keys).
const std::vector<std::string>& config_keys(const std::string& command);
const std::vector<std::string>& output_keys();

// Command plus its computational keys.
nlohmann::json to_json(const RunConfig& cfg);

// Accepts "command", the command's keys and output keys. Missing keys keep
// their defaults. Throws ConfigError.
RunConfig config_from_json(const nlohmann::json& j);

// Enum and option checks throw ConfigError, mathematical domain checks
// DomainError, grammar strings ParseError.
void validate(const RunConfig& cfg);

// JSON number, or "inf" / "-inf" / "nan".
nlohmann::json number(double v);

}  // namespace bessellab::cli
