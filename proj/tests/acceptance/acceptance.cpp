// Runs the ten acceptance criteria and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oraclecomp/checks/suites.hpp"

using oc::checks::SuiteOptions;
using oc::checks::SuiteResult;

namespace {

bool report(int id, const std::string& title, const std::vector<SuiteResult>& parts,
            double seconds) {
  bool ok = true;
  std::size_t cases = 0, checks = 0;
  for (const auto& p : parts) {
    ok = ok && p.passed;
    cases += p.cases;
    checks += p.checks;
  }
  std::printf("[%s] criterion %2d: %s (cases=%zu checks=%zu, %.1fs)\n", ok ? "PASS" : "FAIL", id,
              title.c_str(), cases, checks, seconds);
  for (const auto& p : parts) {
    if (parts.size() > 1 || !p.passed) {
      std::printf("         %s %s: cases=%zu checks=%zu\n", p.passed ? "ok  " : "FAIL",
                  p.name.c_str(), p.cases, p.checks);
    }
    if (!p.passed) std::printf("         counterexample: %s\n", p.counterexample.c_str());
    if (!p.note.empty()) std::printf("         %s\n", p.note.c_str());
  }
  std::fflush(stdout);
  return ok;
}

template <class F>
bool timed(int id, const std::string& title, F run) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> parts = run();
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  return report(id, title, parts, took.count());
}

}  // namespace

int main() {
  SuiteOptions corpus500{42, 500};
  SuiteOptions per_combinator{43, 200};
  SuiteOptions stall_trees{44, 200};
  SuiteOptions tables{45, 1000};
  SuiteOptions runs{46, 100};

  bool all = true;
  all &= timed(1, "delta agrees with transcript enumeration",
               [&] { return std::vector{oc::checks::interrogation_equivalence(corpus500)}; });
  all &= timed(2, "valid transcripts are prefix-ordered",
               [&] { return std::vector{oc::checks::prefix_determinacy(corpus500)}; });
  all &= timed(3, "transcript concatenation law",
               [&] { return std::vector{oc::checks::concatenation_law(corpus500)}; });
  all &= timed(4, "combinators match relational references",
               [&] { return oc::checks::combinator_equivalence(per_combinator); });
  all &= timed(5, "stalling trees elaborate soundly",
               [&] { return std::vector{oc::checks::elaboration_soundness(stall_trees)}; });
  all &= timed(6, "Post's theorem dovetailing",
               [&] { return std::vector{oc::checks::post_theorem_fixtures()}; });
  all &= timed(7, "truth tables agree with Turing execution",
               [&] { return std::vector{oc::checks::truth_table_agreement(tables)}; });
  all &= timed(8, "deficiency-predicate reduction",
               [&] { return std::vector{oc::checks::hypersimple_fixtures()}; });
  all &= timed(9, "perturbations outside the modulus",
               [&] { return std::vector{oc::checks::modulus_property(runs)}; });
  all &= timed(10, "decidability transport",
               [&] { return std::vector{oc::checks::decidability_transport()}; });
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
