#pragma once

// Per-check records shared by the verification harnesses and the CLI.

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace reflectarr {

inline constexpr int kReportSchemaVersion = 1;

struct CheckResult {
  std::string name;
  /// "pass", "fail", "budget-exceeded" or "skipped".
  std::string verdict;
  double seconds = 0;
  std::string detail;
  std::map<std::string, std::string> hashes;  // label -> Ideal::hash()
};

/// Timings are left out when `with_timings` is false, making the output byte-stable.
nlohmann::json to_json(const CheckResult& c, bool with_timings = true);
/// Overall verdict of a list: any budget overrun wins, then any failure.
std::string combine_verdicts(const std::vector<CheckResult>& checks);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace reflectarr
