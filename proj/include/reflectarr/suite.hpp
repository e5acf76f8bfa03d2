#pragma once

// Batch verification: suite files in, JSON report and CSV summary out.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reflectarr/arrangement.hpp"

namespace reflectarr {

struct SuiteQuery {
  std::string id;
  std::string op;
  nlohmann::json params;
  nlohmann::json expected;
  std::string provenance;  // "published", "trivial" or "derived"
  std::size_t line = 0;
};

struct VerificationSuite {
  std::string name;
  std::optional<std::uint64_t> budget;
  std::vector<SuiteQuery> queries;
};

/// Throws ParseError carrying the offending line.
VerificationSuite parse_suite(const std::string& text);

struct QueryOutcome {
  SuiteQuery query;
  nlohmann::json observed;
  /// "match", "mismatch", "budget-exceeded" or "error".
  std::string status;
  std::string detail;
};

struct Evaluation {
  nlohmann::json observed;
  std::string detail;
};

/// Evaluates one operation; throws on precondition and budget failures.
Evaluation evaluate(const std::string& op, const nlohmann::json& params);
QueryOutcome run_query(const SuiteQuery& q, std::optional<std::uint64_t> budget);

struct SuiteResult {
  std::string name;
  std::vector<QueryOutcome> outcomes;  // suite order
  /// 0 when everything matches, 2 on any mismatch or error, else 3 on a budget overrun.
  int exit_code() const;
  nlohmann::json report() const;
  std::string summary_csv() const;
};

/// Runs queries on up to `jobs` threads (0 picks the hardware concurrency).
SuiteResult run_suite(const VerificationSuite& suite, unsigned jobs = 0);

/// `name,exponents,coexponents,e_RJ` rows with space-separated lists, after a header line.
std::vector<SporadicRecord> parse_sporadic_csv(const std::string& text);
std::string sporadic_data_csv(const std::vector<SporadicRecord>& records);
/// Data columns plus the computed e_M and e_Q and which of them match e(R/J).
std::string sporadic_report_csv(const std::vector<SporadicRecord>& records);

}  // namespace reflectarr
