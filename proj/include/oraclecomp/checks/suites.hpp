#pragma once

// Property suites shared by the acceptance binary and `oraclecomp selftest`.
// Each suite reports how many instances it checked and, on failure, the
// smallest failing instance it saw.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "oraclecomp/truthtable.hpp"

namespace oc::checks {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;   // random instances or fixture inputs
  std::size_t checks = 0;  // individual comparisons
  std::string counterexample;
  std::string note;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t cases = 200;
  TableIndexing indexing = TableIndexing::big_endian;
};

// Random corpora. `cases` is the number of random instances.
SuiteResult interrogation_equivalence(const SuiteOptions& opts);
SuiteResult prefix_determinacy(const SuiteOptions& opts);
SuiteResult concatenation_law(const SuiteOptions& opts);
std::vector<SuiteResult> combinator_equivalence(const SuiteOptions& opts);
SuiteResult elaboration_soundness(const SuiteOptions& opts);
SuiteResult truth_table_agreement(const SuiteOptions& opts);
SuiteResult modulus_property(const SuiteOptions& opts);
SuiteResult partiality_laws(const SuiteOptions& opts);

// Fixed fixtures.
SuiteResult post_theorem_fixtures();
SuiteResult hypersimple_fixtures();
SuiteResult decidability_transport();

// The randomised suites with the given options, in a fixed order.
std::vector<SuiteResult> run_property_suites(const SuiteOptions& opts);

}  // namespace oc::checks
