// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned in the shared suite implementations.

#include <chrono>
#include <cstdio>
#include <vector>

#include "alglab/suites.hpp"

using namespace alglab;

namespace {

struct Outcome {
  std::string label;
  bool passed;
  std::vector<CheckResult> failures;
  double seconds;
};

std::vector<Outcome> outcomes;

template <class F>
void criterion(const std::string& label, F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<SuiteResult> parts = fn();
  auto t1 = std::chrono::steady_clock::now();
  Outcome o;
  o.label = label;
  o.passed = true;
  o.seconds = std::chrono::duration<double>(t1 - t0).count();
  for (const auto& s : parts) {
    for (const auto& c : s.checks)
      if (!c.passed) o.failures.push_back({s.suite + ": " + c.name, false, c.expected, c.observed});
    o.passed = o.passed && s.passed;
  }
  std::printf("%s  %s  (%.1fs)\n", o.passed ? "PASS" : "FAIL", label.c_str(), o.seconds);
  for (const auto& f : o.failures)
    std::printf("      failed: %s\n        expected %s\n        observed %s\n", f.name.c_str(),
                f.expected.c_str(), f.observed.c_str());
  std::fflush(stdout);
  outcomes.push_back(std::move(o));
}

}  // namespace

int main() {
  const std::uint64_t seed = 0x5EC7;

  criterion("criterion 1: exact constant sectional values", [&] {
    return std::vector<SuiteResult>{suite_constant_sect()};
  });

  criterion("criterion 2: hermitian witness planes, bounds, and 1e5-plane sampling", [&] {
    std::vector<SuiteResult> parts;
    for (auto [n, level] :
         std::vector<std::pair<int, int>>{{3, 0}, {3, 1}, {3, 2}, {3, 3}, {4, 0}}) {
      OptimizerConfig cfg;
      cfg.starts = 64;
      cfg.samples = 100000;
      cfg.seed = seed;
      auto t0 = std::chrono::steady_clock::now();
      parts.push_back(suite_herm_bounds(n, level, cfg));
      auto t1 = std::chrono::steady_clock::now();
      double secs = std::chrono::duration<double>(t1 - t0).count();
      SuiteResult& last = parts.back();
      last.add("runtime <= 60 s", secs <= 60.0, "<= 60 s", double_str(secs) + " s");
    }
    return parts;
  });

  criterion("criterion 3: commutator norm constants (mat(2,C), quaternions, so(4))", [&] {
    OptimizerConfig cfg;
    cfg.starts = 32;
    cfg.samples = 1000000;
    cfg.seed = seed;
    return std::vector<SuiteResult>{suite_bw_mat(2, 1, cfg), suite_bw_mat(1, 2, cfg),
                                    suite_bw_so(4, cfg)};
  });

  criterion("criterion 4: idempotent/square-zero table at eps = 1", [&] {
    SearchConfig cfg;
    cfg.seed = seed;
    return std::vector<SuiteResult>{suite_table1(Rat(1), cfg)};
  });

  criterion("criterion 5: symmetric composition bounds", [&] {
    OptimizerConfig cfg;
    cfg.samples = 100000;
    cfg.seed = seed;
    return std::vector<SuiteResult>{suite_symmetric_composition(cfg)};
  });

  criterion("criterion 6: identity battery", [&] {
    return std::vector<SuiteResult>{suite_identities()};
  });

  criterion("criterion 7: random-algebra property suites", [&] {
    return std::vector<SuiteResult>{suite_bianchi(20, seed)};
  });

  criterion("criterion 8: idempotent/square-zero structure consequences", [&] {
    SearchConfig cfg;
    cfg.seed = seed;
    return std::vector<SuiteResult>{suite_consequences(cfg)};
  });

  criterion("criterion 9: optimizer health and determinism", [&] {
    OptimizerConfig cfg;
    cfg.seed = seed;
    return std::vector<SuiteResult>{suite_optimizer_health(cfg)};
  });

  int failed = 0;
  for (const auto& o : outcomes) failed += !o.passed;
  std::printf("\n%zu criteria run, %d failed\n", outcomes.size(), failed);
  if (failed) {
    std::printf(
        "note: the so(4) sub-check asserts the stated target 2; the measured supremum is 1,\n"
        "      attained by the exact self-dual pair A12+A34, A13-A24, and the commuting-ideal\n"
        "      decomposition of so(4) bounds the ratio by 1, so the stated value is not\n"
        "      attainable by a correct implementation.\n");
  }
  return failed == 0 ? 0 : 1;
}
