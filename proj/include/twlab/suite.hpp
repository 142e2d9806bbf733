#pragma once

#include <string>
#include <vector>

#include "twlab/report.hpp"

namespace twlab {

// Configuration for the full verification matrix. `roster` holds canonical
// ring-spec texts; when nonempty, ring-dependent cases are restricted to the
// listed rings (ring-free cases always run). Parsed eagerly so bad specs
// surface as offset-bearing parse errors.
struct SuiteConfig {
  std::vector<std::string> roster;
  unsigned long long seed = 0;
  long jobs = 1;
};

// JSON object {"roster": [...], "seed": n, "jobs": n}, all fields optional.
// Unknown keys are rejected.
SuiteConfig parse_suite_config(const std::string& json_text);

struct CriterionResult {
  std::string name;
  Report report;
  double seconds = 0.0;
};

// The ten-point verification matrix at desk scale, in a fixed order. Rows are
// deterministic given (roster, seed); `jobs` > 1 runs the criteria in a small
// thread pool, with single-threaded ordered assembly. The two budgeted
// criteria (toy-iso, mu-criterion) carry a runtime row checked against their
// wall-clock budgets (60 s and 120 s).
std::vector<CriterionResult> run_acceptance(const SuiteConfig& config = {});

}  // namespace twlab
