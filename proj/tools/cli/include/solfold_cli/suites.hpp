#pragma once

#include "solfold_cli/config.hpp"
#include "solfold_cli/json_out.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace solfold::cli {

struct Check {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string paper_ref;  // the claim being checked
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tol_scale = 1.0;
  std::vector<Check> checks;

  bool all_pass() const;
};

// Runs cfg.suite (sol | heis | kleinian | quotient | all). Thresholds are the
// base tolerances divided by cfg.tol_scale; exact checks keep threshold 0.
SuiteReport run_suite(const RunConfig& cfg);

std::vector<Check> sol_checks(const RunConfig& cfg);
std::vector<Check> heis_checks(const RunConfig& cfg);
std::vector<Check> kleinian_checks(const RunConfig& cfg);
std::vector<Check> quotient_checks(const RunConfig& cfg);

Json report_to_json(const SuiteReport& report);
// Inverse of report_to_json; null residuals read back as NaN. Throws
// ConfigError("in") when the document does not follow the report schema.
SuiteReport report_from_json(const Json& j);
std::string report_to_csv(const SuiteReport& report);

}  // namespace solfold::cli
