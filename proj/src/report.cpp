#include "tetragauge/report.hpp"

#include <sstream>

#include "json.hpp"

namespace tetragauge {

bool Report::all_ok() const noexcept {
  for (const auto& c : checks)
    if (!c.as_expected()) return false;
  return true;
}

std::string Report::summary_line() const {
  int ok = 0;
  for (const auto& c : checks) ok += c.as_expected() ? 1 : 0;
  std::ostringstream out;
  out << (all_ok() ? "PASS" : "FAIL") << " " << command << ": " << ok << "/" << checks.size()
      << " checks as expected (seed " << seed << ")";
  return out.str();
}

std::string to_json(const Report& report) {
  nlohmann::json j;
  j["command"] = report.command;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  if (!report.field.empty()) j["field"] = report.field;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["max_dev"] = c.max_dev;
    jc["tolerance"] = c.tolerance;
    if (c.expect_fail) jc["expected"] = "fail";
    j["checks"].push_back(jc);
  }
  j["runtime_ms"] = report.runtime_ms;
  return j.dump(2);
}

}  // namespace tetragauge
