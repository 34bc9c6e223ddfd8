#include "cli/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <variant>

#include "bessellab/data_function.hpp"
#include "bessellab/errors.hpp"
#include "bessellab/kernels.hpp"
#include "bessellab/maximal.hpp"
#include "bessellab/weight_spec.hpp"
#include "bessellab/weights.hpp"

namespace bessellab::cli {

namespace {

using json = nlohmann::json;

using Field = std::variant<std::string RunConfig::*, double RunConfig::*, int RunConfig::*, bool RunConfig::*,
                           std::vector<double> RunConfig::*>;

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = {
      {"which", &RunConfig::which},
      {"method", &RunConfig::method},
      {"lambda", &RunConfig::lambda},
      {"t", &RunConfig::t},
      {"y", &RunConfig::y},
      {"quad_nodes", &RunConfig::quad_nodes},
      {"quad_max_error", &RunConfig::quad_max_error},
      {"suite", &RunConfig::suite},
      {"lambda_set", &RunConfig::lambda_set},
      {"grid", &RunConfig::grid},
      {"drift_limit", &RunConfig::drift_limit},
      {"class", &RunConfig::weight_class},
      {"p", &RunConfig::p},
      {"T", &RunConfig::T},
      {"weight", &RunConfig::weight},
      {"shells", &RunConfig::shells},
      {"R", &RunConfig::R},
      {"s", &RunConfig::s},
      {"op", &RunConfig::op},
      {"a", &RunConfig::a},
      {"t_nodes", &RunConfig::t_nodes},
      {"refinement", &RunConfig::refinement},
      {"data", &RunConfig::data},
      {"probe", &RunConfig::probe},
      {"v", &RunConfig::v},
      {"u", &RunConfig::u},
      {"t_schedule", &RunConfig::t_schedule},
      {"x_grid", &RunConfig::x_grid},
  };
  return table;
}

// "x" is a scalar for kernel and a list for maximal.
Field field_for(const std::string& command, const std::string& key) {
  if (key == "x") return command == "maximal" ? Field(&RunConfig::xs) : Field(&RunConfig::x);
  return fields().at(key);
}

double parse_number(const json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ConfigError("config key '" + key + "' must be a number");
}

void read_field(RunConfig& cfg, const Field& field, const json& v, const std::string& key) {
  std::visit(
      [&](auto member) {
        using T = std::remove_reference_t<decltype(cfg.*member)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
          cfg.*member = v.get<std::string>();
        } else if constexpr (std::is_same_v<T, double>) {
          cfg.*member = parse_number(v, key);
        } else if constexpr (std::is_same_v<T, int>) {
          if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
          cfg.*member = v.get<int>();
        } else if constexpr (std::is_same_v<T, bool>) {
          if (!v.is_boolean()) throw ConfigError("config key '" + key + "' must be true or false");
          cfg.*member = v.get<bool>();
        } else {
          std::vector<double> out;
          if (v.is_array()) {
            for (const auto& e : v) out.push_back(parse_number(e, key));
          } else {
            out.push_back(parse_number(v, key));
          }
          cfg.*member = out;
        }
      },
      field);
}

json write_field(const RunConfig& cfg, const Field& field) {
  return std::visit(
      [&](auto member) -> json {
        using T = std::remove_cvref_t<decltype(cfg.*member)>;
        if constexpr (std::is_same_v<T, double>) {
          return number(cfg.*member);
        } else if constexpr (std::is_same_v<T, std::vector<double>>) {
          json arr = json::array();
          for (double d : cfg.*member) arr.push_back(number(d));
          return arr;
        } else {
          return cfg.*member;
        }
      },
      field);
}

bool one_of(const std::string& s, std::initializer_list<const char*> options) {
  return std::any_of(options.begin(), options.end(), [&](const char* o) { return s == o; });
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive and finite");
}

}  // namespace

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"kernel", "verify", "weights", "maximal", "solve"};
  return c;
}

const std::vector<std::string>& config_keys(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> keys = {
      {"kernel", {"which", "method", "lambda", "t", "x", "y", "quad_nodes", "quad_max_error"}},
      {"verify", {"suite", "lambda_set", "grid", "drift_limit"}},
      {"weights", {"class", "p", "lambda", "T", "weight", "shells", "R", "s"}},
      {"maximal", {"op", "lambda", "a", "t_nodes", "refinement", "R", "x", "data", "probe", "v", "u", "p"}},
      {"solve", {"which", "lambda", "data", "t_schedule", "x_grid"}},
  };
  const auto it = keys.find(command);
  if (it == keys.end()) throw ConfigError("unknown command '" + command + "'");
  return it->second;
}

const std::vector<std::string>& output_keys() {
  static const std::vector<std::string> k = {"json", "csv", "no_timings", "threads"};
  return k;
}

json to_json(const RunConfig& cfg) {
  json j = json::object();
  j["command"] = cfg.command;
  for (const auto& key : config_keys(cfg.command)) j[key] = write_field(cfg, field_for(cfg.command, key));
  return j;
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  if (!j.contains("command") || !j["command"].is_string()) throw ConfigError("config needs a string 'command'");
  RunConfig cfg;
  cfg.command = j["command"].get<std::string>();
  const auto& keys = config_keys(cfg.command);
  for (const auto& [key, value] : j.items()) {
    if (key == "command") continue;
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
      read_field(cfg, field_for(cfg.command, key), value, key);
    } else if (key == "json" || key == "csv") {
      if (!value.is_string()) throw ConfigError("config key '" + key + "' must be a string");
      (key == "json" ? cfg.output.json_path : cfg.output.csv_path) = value.get<std::string>();
    } else if (key == "no_timings") {
      if (!value.is_boolean()) throw ConfigError("config key 'no_timings' must be true or false");
      cfg.output.no_timings = value.get<bool>();
    } else if (key == "threads") {
      if (!value.is_number_integer()) throw ConfigError("config key 'threads' must be an integer");
      cfg.output.threads = value.get<int>();
    } else {
      throw ConfigError("unknown config key '" + key + "' for command '" + cfg.command + "'");
    }
  }
  return cfg;
}

void validate(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  config_keys(c);
  if (cfg.output.threads < 0) throw ConfigError("threads must be >= 0");

  if (c == "kernel") {
    if (!one_of(cfg.which, {"heat", "poisson"})) throw ConfigError("which must be heat or poisson");
    if (!one_of(cfg.method, {"explicit", "spectral", "subordination"}))
      throw ConfigError("method must be explicit, spectral or subordination");
    if (cfg.which == "heat" && cfg.method == "subordination")
      throw ConfigError("subordination computes the Poisson kernel; use explicit or spectral for heat");
    if (cfg.which == "poisson" && cfg.method == "spectral")
      throw ConfigError("spectral computes the heat kernel; use explicit or subordination for poisson");
    if (cfg.quad_nodes < 32) throw ConfigError("quad_nodes must be >= 32");
    LambdaParam{cfg.lambda};
    KernelPoint{cfg.t, cfg.x, cfg.y}.validate();
    SubordinationQuad q;
    q.nodes = static_cast<std::size_t>(cfg.quad_nodes);
    q.max_error = cfg.quad_max_error;
    q.validate();
  } else if (c == "verify") {
    if (!one_of(cfg.suite, {"kernels", "estimates", "convergence", "weights", "maximal", "all"}))
      throw ConfigError("suite must be kernels, estimates, convergence, weights, maximal or all");
    if (!one_of(cfg.grid, {"quick", "default", "full"})) throw ConfigError("grid must be quick, default or full");
    if (cfg.lambda_set.empty()) throw ConfigError("lambda_set must not be empty");
    if (!(cfg.drift_limit > 0.0) || !std::isfinite(cfg.drift_limit))
      throw ConfigError("drift_limit must be positive");
    for (double l : cfg.lambda_set) {
      LambdaParam(l).require_nonnegative("verify");
    }
  } else if (c == "weights") {
    if (!one_of(cfg.weight_class, {"heat", "poisson"})) throw ConfigError("class must be heat or poisson");
    LambdaParam(cfg.lambda).require_nonnegative("weights");
    LebesgueExponent{cfg.p};
    if (!(cfg.T > 0.0)) throw DomainError("T must be positive (inf allowed)");
    if (cfg.shells < 0) throw ConfigError("shells must be >= 0");
    if (cfg.shells > 0) {
      if (!(cfg.R > 1.0) || !std::isfinite(cfg.R)) throw DomainError("shell radius factor R must exceed 1");
      if (!(cfg.s > 0.0 && cfg.s < 1.0)) throw DomainError("s must lie in (0, 1)");
    }
    WeightSpec::parse(cfg.weight);
  } else if (c == "maximal") {
    if (!one_of(cfg.op, {"heat", "poisson", "hl"})) throw ConfigError("op must be heat, poisson or hl");
    if (cfg.op != "hl") LambdaParam(cfg.lambda).require_nonnegative("maximal");
    if (cfg.t_nodes < 16) throw ConfigError("t_nodes must be >= 16");
    if (cfg.refinement < 0) throw ConfigError("refinement must be >= 0");
    if (cfg.xs.empty()) throw ConfigError("x list must not be empty");
    MaximalConfig mc{cfg.a, cfg.t_nodes, cfg.refinement};
    mc.validate();
    require_positive(cfg.R, "R");
    for (double x : cfg.xs) require_positive(x, "x");
    DataFunction::parse(cfg.data);
    if (cfg.probe) {
      LebesgueExponent{cfg.p};
      WeightSpec::parse(cfg.v);
      WeightSpec::parse(cfg.u);
    }
  } else if (c == "solve") {
    if (!one_of(cfg.which, {"heat", "poisson"})) throw ConfigError("which must be heat or poisson");
    LambdaParam{cfg.lambda};
    if (cfg.t_schedule.empty() || cfg.x_grid.empty()) throw ConfigError("t_schedule and x_grid must not be empty");
    for (double t : cfg.t_schedule) require_positive(t, "t");
    for (double x : cfg.x_grid) require_positive(x, "x");
    DataFunction::parse(cfg.data);
  }
}

}  // namespace bessellab::cli
