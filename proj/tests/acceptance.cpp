// Acceptance gate: one line per criterion, exit 0 only if every one passes.
// Each criterion drives a verification suite over the built-in corpus; the
// two expensive searches also carry wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "hvn/errors.hpp"
#include "hvn/verify.hpp"

using hvn::SuiteReport;

namespace {

struct Criterion {
  std::string name;
  std::function<SuiteReport()> run;
  double budget_seconds = 0;  // 0 means no runtime target
};

bool run_criterion(int index, int total, const Criterion& c) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  SuiteReport report;
  std::string blowup;
  try {
    report = c.run();
  } catch (const std::exception& e) {
    blowup = e.what();
  }
  double elapsed = std::chrono::duration<double>(clock::now() - start).count();

  bool pass = blowup.empty() && report.ok() && !report.checks.empty() &&
              (c.budget_seconds == 0 || elapsed < c.budget_seconds);
  std::printf("[%s] %d/%d %s (%d checks, %.1f s", pass ? "PASS" : "FAIL", index, total,
              c.name.c_str(), report.passed() + report.failed(), elapsed);
  if (c.budget_seconds > 0) std::printf(", budget %.0f s", c.budget_seconds);
  std::printf(")\n");

  if (!blowup.empty()) std::printf("       unexpected exception: %s\n", blowup.c_str());
  int shown = 0;
  for (const hvn::CheckResult& check : report.checks) {
    if (check.pass || shown == 5) continue;
    std::printf("       failed: %s (%s)\n", check.name.c_str(), check.detail.c_str());
    ++shown;
  }
  if (report.failed() > shown) std::printf("       ... %d more failures\n", report.failed() - shown);
  return pass;
}

}  // namespace

int main() {
  const unsigned seed = 1;
  std::vector<Criterion> criteria = {
      {"character tables exact: orthogonality and degree sums, corpus plus GL(3,2)",
       [] { return hvn::run_chartable_suite(24, true); }, 60},
      {"duality: grouplike subsets biject with normal subgroups, rep/tan roundtrips (order <= 24)",
       [] { return hvn::run_duality_suite(24); }},
      {"abelian coherence: ddual/cdual inverse and agreement with rep/tan (order <= 32)",
       [] { return hvn::run_abelian_suite(32); }},
      {"env/rot equivalence: pointed roundtrip on normal transitive actions (<= 24 points)",
       [] { return hvn::run_envrot_suite(24, 24, seed); }},
      {"isomorphism decision: spectrum verdicts and certificates match exhaustive search (<= 16 points)",
       [] { return hvn::run_hvn_suite(24, 16, seed); }},
      {"realization: every grouplike subset is the spectrum of a normal system (order <= 24)",
       [] { return hvn::run_realization_suite(24); }},
      {"meas/top equivalence: roundtrips and verdict agreement (<= 12 points)",
       [] { return hvn::run_meastop_suite(24, 12); }},
      {"spectrum non-completeness: GL(3,2) equal-spectrum non-isomorphic 7-point pair",
       [] { return hvn::run_gassmann_suite(); }, 120},
      {"multiplicity bound: mult(i) <= deg(i) on every minimal system (order <= 24)",
       [] { return hvn::run_multbound_suite(24); }},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (run_criterion(static_cast<int>(i) + 1, static_cast<int>(criteria.size()), criteria[i])) {
      ++passed;
    }
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
