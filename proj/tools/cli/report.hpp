#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "cli/run_config.hpp"
#include "json.hpp"

namespace bessellab::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.3.0";

struct Check {
  std::string name;
  std::string basis;     // closed_form, cross_method, invariant, grid_sweep, exact_band, oracle, truth_table
  nlohmann::json observed;
  nlohmann::json limit;
  std::string relation;  // "<=", ">=", "==", "in", "<"
  bool pass = false;
  std::string detail;
};

// Plot-ready table, written as CSV.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

// Shortest round-trip decimal, independent of the locale.
std::string fmt(double v);

class Report {
 public:
  explicit Report(const RunConfig& cfg);

  nlohmann::json& results() { return results_; }
  std::vector<Check>& checks() { return checks_; }
  Table& table() { return table_; }
  const Table& table() const { return table_; }

  void add_check(Check c) { checks_.push_back(std::move(c)); }
  bool all_pass() const;

  // Times a labelled phase; labels keep their first-seen order.
  template <class F>
  auto timed(const std::string& label, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    struct Stop {
      Report* self;
      std::string label;
      std::chrono::steady_clock::time_point start;
      ~Stop() {
        self->timings_.emplace_back(label,
                                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
    } stop{this, label, start};
    return f();
  }

  nlohmann::json to_json(bool with_timings) const;
  std::string render(bool with_timings) const;

 private:
  nlohmann::json inputs_;
  std::string command_;
  nlohmann::json results_ = nlohmann::json::array();
  std::vector<Check> checks_;
  Table table_;
  std::vector<std::pair<std::string, double>> timings_;
  std::chrono::steady_clock::time_point created_;
};

std::string render_csv(const Table& table);

}  // namespace bessellab::cli
