#pragma once

#include <json.hpp>

#include "alglab/sectional.hpp"
#include "alglab/special.hpp"

namespace alglab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string observed;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed = true;

  void add(const std::string& name, bool ok, const std::string& expected,
           const std::string& observed) {
    checks.push_back({name, ok, expected, observed});
    passed = passed && ok;
  }
  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["passed"] = passed;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name},
                             {"passed", c.passed},
                             {"expected", c.expected},
                             {"observed", c.observed}});
    return j;
  }
};

// verification suites; each check records expected vs observed values
SuiteResult suite_constant_sect();
SuiteResult suite_table1(const Rat& eps, SearchConfig cfg);
SuiteResult suite_herm_bounds(int n, int level, OptimizerConfig cfg);
SuiteResult suite_bw_mat(int n, int level, OptimizerConfig cfg);
SuiteResult suite_bw_so(int n, OptimizerConfig cfg);
SuiteResult suite_symmetric_composition(OptimizerConfig cfg);
SuiteResult suite_identities();
SuiteResult suite_bianchi(int algebras, std::uint64_t seed);
SuiteResult suite_norton(int n, int level, long samples, std::uint64_t seed, int threads = 0);
SuiteResult suite_cdk(int n, int level, long samples, std::uint64_t seed, bool explore);
SuiteResult suite_consequences(SearchConfig cfg);
SuiteResult suite_optimizer_health(OptimizerConfig cfg);

}  // namespace alglab
