#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylkit/normal_form.hpp"

namespace weylkit {

struct SuiteOptions {
  int max_degree = 6;
  int free_cutoff = 6;
  int jobs = 1;
};

struct CaseFailure {
  std::vector<long> params;
  std::optional<NormalForm> discrepancy;  // set when the case lives in the engine
  std::string detail;
};

/// One verification suite run: case count, failures, free-form notes.
/// Diagnostic suites (asserted == false) report mismatches but never gate
/// an exit status.
struct SuiteResult {
  std::string name;
  bool asserted = true;
  long cases = 0;
  std::vector<CaseFailure> failures;
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool clean() const { return failures.empty(); }
  bool gate_failed() const { return asserted && !failures.empty(); }
};

const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);
bool suite_is_asserted(const std::string& name);

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opts);

/// Aggregate report: {"suites":[{"name","asserted","cases","failures",...}]},
/// suites sorted by name, cases by parameter tuple. Deterministic for
/// fixed options (no timing data inside).
std::string report_json(const std::vector<SuiteResult>& results);

/// Human-readable dump of the two Z1 forms and the literal-vs-oracle
/// comparison at the given cutoff.
std::string bch_report_text(int cutoff);

}  // namespace weylkit
