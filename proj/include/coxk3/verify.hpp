#pragma once

// The reproduction harness: every published value this library re-derives,
// organized as independent cases with machine-readable reports.

#include <json.hpp>

#include <string>
#include <vector>

namespace coxk3::verify {

struct Report {
  std::string id;
  std::string status;  // "pass" | "fail" | "deviation"
  nlohmann::json expected;
  nlohmann::json actual;
  std::string citation;

  bool unexpected_failure() const { return status == "fail"; }
};

/// All case ids, in report order.
std::vector<std::string> case_ids();

/// True iff the id names a case whose expected outcome is "deviation".
bool deviation_expected(const std::string& id);

Report run_case(const std::string& id);

/// Run all cases (or the one matching `filter`); throws on unknown filter.
std::vector<Report> run(const std::string& filter = "");

}  // namespace coxk3::verify
