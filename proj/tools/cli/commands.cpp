#include "cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "bessellab/data_function.hpp"
#include "bessellab/errors.hpp"
#include "bessellab/kernels.hpp"
#include "bessellab/maximal.hpp"
#include "bessellab/semigroup.hpp"
#include "bessellab/weight_spec.hpp"
#include "bessellab/weights.hpp"
#include "cli/suites.hpp"

namespace bessellab::cli {

namespace {

using json = nlohmann::json;

double rel_delta(double v, double ref) { return ref != 0.0 ? (v - ref) / ref : v - ref; }

void cmd_kernel(const RunConfig& cfg, Report& rep) {
  const LambdaParam lp(cfg.lambda);
  const KernelPoint pt{cfg.t, cfg.x, cfg.y};
  SubordinationQuad q;
  q.nodes = static_cast<std::size_t>(cfg.quad_nodes);
  q.max_error = cfg.quad_max_error;

  std::vector<std::pair<std::string, std::function<double()>>> methods;
  std::string unavailable;
  if (cfg.which == "heat") {
    methods.emplace_back("explicit", [&] { return heat_kernel(lp, pt); });
    if (spectral_supported(pt))
      methods.emplace_back("spectral", [&] { return heat_kernel_spectral(lp, pt, q); });
    else if (cfg.method != "spectral")
      unavailable = "spectral";
  } else {
    methods.emplace_back("explicit", [&] { return poisson_kernel_hyp(lp, pt); });
    methods.emplace_back("subordination", [&] { return poisson_kernel_subord(lp, pt, q); });
  }

  double selected = 0.0;
  for (const auto& [name, f] : methods)
    if (name == cfg.method) selected = rep.timed(name, f);
  if (cfg.method == "spectral" && methods.size() == 1) selected = heat_kernel_spectral(lp, pt, q);

  rep.table().header = {"method", "value", "rel_delta"};
  rep.results().push_back({{"method", cfg.method}, {"value", number(selected)}, {"selected", true}});
  rep.table().add({cfg.method, fmt(selected), "0"});
  for (const auto& [name, f] : methods) {
    if (name == cfg.method) continue;
    const double v = rep.timed(name, f);
    const double d = rel_delta(v, selected);
    rep.results().push_back({{"method", name}, {"value", number(v)}, {"selected", false}, {"rel_delta", number(d)}});
    rep.table().add({name, fmt(v), fmt(d)});
  }
  if (!unavailable.empty()) {
    rep.results().push_back({{"method", unavailable},
                             {"available", false},
                             {"reason", "spectral route needs t >= " + fmt(kSpectralMinTime) + " and (x-y)^2/4t <= " +
                                            fmt(kSpectralMaxExponent)}});
  }
  if (cfg.which == "heat") rep.results().push_back({{"quantity", "log_value"}, {"value", number(log_heat_kernel(lp, pt))}});
}

void cmd_verify(const RunConfig& cfg, const Exec& exec, Report& rep) {
  std::vector<std::string> suites;
  if (cfg.suite == "all")
    suites = suite_names();
  else
    suites = {cfg.suite};
  for (const auto& s : suites) rep.timed(s, [&] { run_suite(s, cfg, exec, rep); });
  rep.table().header = {"check", "basis", "observed", "limit", "relation", "pass"};
  for (const auto& c : rep.checks()) {
    auto text = [](const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
    rep.table().add({c.name, c.basis, text(c.observed), text(c.limit), c.relation, c.pass ? "true" : "false"});
  }
}

void cmd_weights(const RunConfig& cfg, const Exec& exec, Report& rep) {
  const WeightSpec v = WeightSpec::parse(cfg.weight);
  const LebesgueExponent p(cfg.p);
  const Problem cls = cfg.weight_class == "heat" ? Problem::Heat : Problem::Poisson;
  const auto m = rep.timed("membership", [&] { return membership(v, cfg.lambda, p, cls, cfg.T, exec); });

  json norms = json::array();
  rep.table().header = {"t", "norm", "status", "tail_slope"};
  for (std::size_t i = 0; i < m.norms.size(); ++i) {
    const auto& n = m.norms[i];
    json e = {{"value", number(n.value)}, {"status", to_string(n.status)}, {"tail_slope", number(n.tail_slope)}};
    if (cls == Problem::Heat) e["t"] = m.ts[i];
    norms.push_back(e);
    rep.table().add({cls == Problem::Heat ? fmt(m.ts[i]) : "", fmt(n.value), to_string(n.status), fmt(n.tail_slope)});
  }
  json res = {{"class", cfg.weight_class}, {"weight", v.to_string()}, {"verdict", to_string(m.verdict)},
              {"norms", norms}};
  if (cls == Problem::Poisson) res["norm"] = number(m.norms.front().value);
  if (!m.note.empty()) res["note"] = m.note;
  rep.results().push_back(res);

  if (cfg.shells > 0) {
    const auto sc = rep.timed("shells", [&] { return shell_constants(v, p, cfg.R, cfg.s, cfg.shells); });
    json rows = json::array();
    for (const auto& s : sc)
      rows.push_back({{"k", s.k}, {"shell", {s.shell_lo, s.shell_hi}}, {"measure", s.measure},
                      {"V", number(s.V)}, {"C", number(s.C)}});
    rep.results().push_back({{"quantity", "shell_constants"}, {"R", cfg.R}, {"s", cfg.s}, {"shells", rows}});
  }
}

void cmd_maximal(const RunConfig& cfg, const Exec& exec, Report& rep) {
  const DataFunction f = DataFunction::parse(cfg.data);
  const MaximalOp op = parse_maximal_op(cfg.op);
  const MaximalConfig mc{cfg.a, cfg.t_nodes, cfg.refinement};
  std::vector<double> values(cfg.xs.size());
  rep.timed("maximal", [&] {
    parallel_for(values.size(), exec, [&](std::size_t i) {
      const double x = cfg.xs[i];
      switch (op) {
        case MaximalOp::Heat: values[i] = heat_maximal(LambdaParam(cfg.lambda), f, mc, x); break;
        case MaximalOp::Poisson: values[i] = poisson_maximal(LambdaParam(cfg.lambda), f, mc, x); break;
        case MaximalOp::HardyLittlewood: values[i] = local_hl_maximal(f, cfg.R, x); break;
      }
    });
  });
  rep.table().header = {"x", "value"};
  json rows = json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    rows.push_back({{"x", cfg.xs[i]}, {"value", number(values[i])}});
    rep.table().add({fmt(cfg.xs[i]), fmt(values[i])});
  }
  rep.results().push_back({{"op", to_string(op)}, {"data", f.to_string()}, {"values", rows}});

  if (cfg.probe) {
    ProbeOptions po;
    po.cfg = mc;
    po.R = cfg.R;
    po.exec = exec;
    const auto pr = rep.timed("probe", [&] {
      return boundedness_probe(op, LambdaParam(cfg.lambda), WeightSpec::parse(cfg.v), WeightSpec::parse(cfg.u),
                               LebesgueExponent(cfg.p), probe_catalog(), po);
    });
    json samples = json::array();
    for (const auto& s : pr.samples) {
      json e = {{"data", s.data}, {"f_norm", number(s.f_norm)}, {"tf_norm", number(s.tf_norm)},
                {"ratio", number(s.ratio)}, {"diverged", s.diverged}};
      if (!s.message.empty()) e["message"] = s.message;
      samples.push_back(e);
    }
    rep.results().push_back({{"quantity", "boundedness_probe"},
                             {"v", pr.v},
                             {"u", pr.u},
                             {"p", pr.p},
                             {"samples", samples},
                             {"max_ratio", number(pr.max_ratio)},
                             {"all_finite", pr.all_finite},
                             {"necessity_failure", pr.necessity_failure}});
  }
}

void cmd_solve(const RunConfig& cfg, const Exec& exec, Report& rep) {
  const LambdaParam lp(cfg.lambda);
  const DataFunction f = DataFunction::parse(cfg.data);
  const std::size_t nx = cfg.x_grid.size();
  std::vector<ApplyResult> out(cfg.t_schedule.size() * nx);
  rep.timed("solve", [&] {
    parallel_for(out.size(), exec, [&](std::size_t k) {
      const double t = cfg.t_schedule[k / nx], x = cfg.x_grid[k % nx];
      out[k] = cfg.which == "heat" ? heat_apply_result(lp, t, x, f) : poisson_apply_result(lp, t, x, f);
    });
  });
  rep.table().header = {"t", "x", "value", "error"};
  json rows = json::array();
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double t = cfg.t_schedule[k / nx], x = cfg.x_grid[k % nx];
    rows.push_back({{"t", t}, {"x", x}, {"value", number(out[k].value)}, {"error", number(out[k].error)}});
    rep.table().add({fmt(t), fmt(x), fmt(out[k].value), fmt(out[k].error)});
  }
  rep.results().push_back({{"which", cfg.which}, {"data", f.to_string()}, {"values", rows}});
}

std::string key_to_flag(const std::string& key) {
  std::string s = key;
  for (char& c : s)
    if (c == '_') c = '-';
  return "--" + s;
}

json error_json(const std::string& kind, const std::string& message, int code) {
  return {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
}

int fail(std::ostream& err, json j) {
  const int code = j["error"]["exit_code"].get<int>();
  err << j.dump() << "\n";
  return code;
}

// Binds every key of a command to its flag. Lists take comma-separated values.
void add_options(CLI::App* sub, RunConfig& flags, std::string& config_path) {
  const std::string cmd = sub->get_name();
  auto str = [&](const char* key, std::string& target, std::string help) {
    sub->add_option(key_to_flag(key), target, std::move(help))->capture_default_str();
  };
  auto num = [&](const char* key, auto& target, std::string help) {
    sub->add_option(key_to_flag(key), target, std::move(help))->capture_default_str();
  };
  auto list = [&](const char* key, std::vector<double>& target, std::string help) {
    sub->add_option(key_to_flag(key), target, std::move(help))->delimiter(',')->capture_default_str();
  };

  if (cmd == "kernel") {
    str("which", flags.which, "heat|poisson");
    str("method", flags.method, "explicit|spectral|subordination");
    num("lambda", flags.lambda, "lambda > -1/2");
    num("t", flags.t, "time");
    num("x", flags.x, "first point");
    num("y", flags.y, "second point");
    num("quad_nodes", flags.quad_nodes, "minimum quadrature samples (>= 32)");
    num("quad_max_error", flags.quad_max_error, "a posteriori error limit");
  } else if (cmd == "verify") {
    str("suite", flags.suite, "kernels|estimates|convergence|weights|maximal|all");
    list("lambda_set", flags.lambda_set, "lambda values, comma separated");
    str("grid", flags.grid, "quick|default|full");
    num("drift_limit", flags.drift_limit, "refinement drift limit of grid sweeps");
  } else if (cmd == "weights") {
    str("class", flags.weight_class, "heat|poisson");
    num("p", flags.p, "Lebesgue exponent p >= 1");
    num("lambda", flags.lambda, "lambda >= 0");
    num("T", flags.T, "heat horizon (inf allowed)");
    str("weight", flags.weight, "weight in the piecewise grammar");
    num("shells", flags.shells, "k_max of the dyadic shell table (0 skips)");
    num("R", flags.R, "shell radius factor R > 1");
    num("s", flags.s, "shell exponent 0 < s < 1");
  } else if (cmd == "maximal") {
    str("op", flags.op, "heat|poisson|hl");
    num("lambda", flags.lambda, "lambda >= 0");
    num("a", flags.a, "time horizon of the maximal operator");
    num("t_nodes", flags.t_nodes, "log-spaced time nodes");
    num("refinement", flags.refinement, "golden-section passes");
    num("R", flags.R, "HL truncation factor");
    list("x", flags.xs, "evaluation points, comma separated");
    str("data", flags.data, "initial data in the catalog grammar");
    sub->add_flag("--probe", flags.probe, "run the L^p(v) -> L^p(u) boundedness probe");
    str("v", flags.v, "probe source weight");
    str("u", flags.u, "probe target weight");
    num("p", flags.p, "probe exponent");
  } else if (cmd == "solve") {
    str("which", flags.which, "heat|poisson");
    num("lambda", flags.lambda, "lambda > -1/2");
    str("data", flags.data, "initial data in the catalog grammar");
    list("t_schedule", flags.t_schedule, "times, comma separated");
    list("x_grid", flags.x_grid, "points, comma separated");
  }
  sub->add_option("--config", config_path, "JSON config file; flags override its keys");
  sub->add_option("--json", flags.output.json_path, "write the JSON report here instead of stdout");
  sub->add_option("--csv", flags.output.csv_path, "write the result table as CSV");
  sub->add_flag("--no-timings", flags.output.no_timings, "omit wall-clock timings");
  sub->add_option("--threads", flags.output.threads, "worker threads (overrides BESSELLAB_THREADS)");
}

// Config file keys first, then every flag given on the command line.
RunConfig merge(CLI::App* sub, const RunConfig& flags, const std::string& config_path) {
  json merged = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot read config file '" + config_path + "'");
    try {
      merged = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("config file '" + config_path + "' is not valid JSON: " + e.what());
    }
    if (!merged.is_object()) throw ConfigError("config must be a JSON object");
    if (merged.contains("command") && merged["command"] != sub->get_name())
      throw ConfigError("config file is for command '" + merged["command"].dump() + "'");
  }
  merged["command"] = sub->get_name();
  RunConfig tmp = flags;
  tmp.command = sub->get_name();
  const json given = to_json(tmp);
  for (const auto& key : config_keys(tmp.command))
    if (sub->get_option(key_to_flag(key))->count() > 0) merged[key] = given[key];
  RunConfig cfg = config_from_json(merged);
  if (sub->get_option("--json")->count()) cfg.output.json_path = flags.output.json_path;
  if (sub->get_option("--csv")->count()) cfg.output.csv_path = flags.output.csv_path;
  if (sub->get_option("--no-timings")->count()) cfg.output.no_timings = true;
  if (sub->get_option("--threads")->count()) cfg.output.threads = flags.output.threads;
  return cfg;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::ios_base::failure("write to '" + path + "' failed");
}

}  // namespace

Exec resolve_exec(const RunConfig& cfg) {
  if (cfg.output.threads > 0) return Exec{static_cast<unsigned>(cfg.output.threads)};
  if (const char* env = std::getenv("BESSELLAB_THREADS"); env && *env) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 0) throw ConfigError("BESSELLAB_THREADS must be a nonnegative integer");
    return Exec{static_cast<unsigned>(n)};
  }
  return Exec{};
}

Report execute(const RunConfig& cfg) {
  validate(cfg);
  const Exec exec = resolve_exec(cfg);
  Report rep(cfg);
  if (cfg.command == "kernel")
    cmd_kernel(cfg, rep);
  else if (cfg.command == "verify")
    cmd_verify(cfg, exec, rep);
  else if (cfg.command == "weights")
    cmd_weights(cfg, exec, rep);
  else if (cfg.command == "maximal")
    cmd_maximal(cfg, exec, rep);
  else if (cfg.command == "solve")
    cmd_solve(cfg, exec, rep);
  return rep;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heat and Poisson semigroups of the Bessel operator: kernels, estimates, weights, maximal operators",
               "bessellab"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  RunConfig flags;
  std::string config_path;
  const std::map<std::string, std::string> about = {
      {"kernel", "evaluate a heat or Poisson kernel with cross-method deltas"},
      {"verify", "run verification suites; exit 1 when a check fails"},
      {"weights", "weight class membership and shell constants"},
      {"maximal", "local maximal operators and boundedness probes"},
      {"solve", "semigroup applied to catalog data on a (t, x) grid"},
  };
  for (const auto& name : commands()) add_options(app.add_subcommand(name, about.at(name)), flags, config_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(err, error_json("usage", e.what(), kUsage));
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    const RunConfig cfg = merge(sub, flags, config_path);
    const Report rep = execute(cfg);
    const std::string text = rep.render(!cfg.output.no_timings);
    if (cfg.output.json_path.empty())
      out << text;
    else
      write_file(cfg.output.json_path, text);
    if (!cfg.output.csv_path.empty()) write_file(cfg.output.csv_path, render_csv(rep.table()));
    return rep.all_pass() ? kOk : kCheckFailed;
  } catch (const ParseError& e) {
    json j = error_json("parse", e.what(), kUsage);
    j["error"]["position"] = e.position();
    return fail(err, j);
  } catch (const ConfigError& e) {
    return fail(err, error_json("usage", e.what(), kUsage));
  } catch (const DomainError& e) {
    return fail(err, error_json("domain", e.what(), kDomain));
  } catch (const DivergenceError& e) {
    json j = error_json("divergence", e.what(), kNumerical);
    for (const auto& [k, v] : e.diagnostics()) j["error"]["diagnostics"][k] = number(v);
    return fail(err, j);
  } catch (const NumericalError& e) {
    json j = error_json("numerical", e.what(), kNumerical);
    for (const auto& [k, v] : e.diagnostics()) j["error"]["diagnostics"][k] = number(v);
    return fail(err, j);
  } catch (const RangeError& e) {
    return fail(err, error_json("range", e.what(), kNumerical));
  } catch (const std::ios_base::failure& e) {
    return fail(err, error_json("io", e.what(), kIo));
  } catch (const std::exception& e) {
    return fail(err, error_json("internal", e.what(), kInternal));
  }
}

}  // namespace bessellab::cli
