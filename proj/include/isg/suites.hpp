#ifndef ISG_SUITES_HPP
#define ISG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "isg/report.hpp"

namespace isg {

// Knobs shared by all verification suites.  trials = 0 picks the per-suite
// default; degree and cap bound the random instances; tol feeds the block
// decomposition.
struct RunConfig {
  std::uint64_t seed = 1;
  int trials = 0;
  int degree = 4;
  int cap = 60;
  double tol = 1e-8;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
int default_trials(const std::string& suite);

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  int trials = 0;
  int failed_trials = 0;
  bool pass = true;
};

// Runs one named suite: pinned fixtures first, then seeded random trials.
// Trials run on a small worker pool; per-trial seeds are derived up front,
// so the outcome is independent of scheduling.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

// Expands "all" in declaration order; otherwise the single named suite.
std::vector<SuiteResult> run_many(const std::string& name,
                                  const RunConfig& cfg);

}  // namespace isg

#endif
