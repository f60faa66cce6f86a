// Machine-readable run reports: one named check per verified property, each
// carrying its measured deviation and the tolerance it was held to.
#ifndef TETRAGAUGE_REPORT_HPP
#define TETRAGAUGE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tetragauge {

struct CheckResult {
  std::string name;
  bool pass = false;        // dev <= tolerance
  double max_dev = 0.0;
  double tolerance = 0.0;
  bool expect_fail = false;  // negative controls are expected to fail

  bool as_expected() const noexcept { return pass != expect_fail; }
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string field;  // set by solution checks only
  std::vector<CheckResult> checks;
  std::int64_t runtime_ms = 0;

  /// True when every check met its expectation; drives the exit code.
  bool all_ok() const noexcept;
  /// One-line human summary for quiet mode.
  std::string summary_line() const;
};

/// Pretty-printed JSON. The body is byte-identical across runs with the same
/// arguments and seed except for runtime_ms.
std::string to_json(const Report& report);

}  // namespace tetragauge

#endif  // TETRAGAUGE_REPORT_HPP
