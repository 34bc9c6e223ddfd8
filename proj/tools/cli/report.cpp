#include "cli/report.hpp"

#include <charconv>
#include <cmath>

namespace bessellab::cli {

using json = nlohmann::json;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

Report::Report(const RunConfig& cfg)
    : inputs_(cli::to_json(cfg)), command_(cfg.command), created_(std::chrono::steady_clock::now()) {}

bool Report::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

json Report::to_json(bool with_timings) const {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command_;
  j["inputs"] = inputs_;
  j["results"] = results_;
  json checks = json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"basis", c.basis},
                      {"observed", c.observed},
                      {"limit", c.limit},
                      {"relation", c.relation},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["passed"] = all_pass();
  if (with_timings) {
    json t = json::array();
    for (const auto& [label, secs] : timings_) t.push_back({{"phase", label}, {"seconds", secs}});
    t.push_back(
        {{"phase", "total"},
         {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - created_).count()}});
    j["timings"] = t;
  }
  return j;
}

std::string Report::render(bool with_timings) const { return to_json(with_timings).dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void append_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += csv_field(row[i]);
  }
  out += '\n';
}

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  append_row(out, table.header);
  for (const auto& row : table.rows) append_row(out, row);
  return out;
}

}  // namespace bessellab::cli
