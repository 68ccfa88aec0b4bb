#include <doctest.h>

#include "oraclecomp/checks/suites.hpp"
#include "oraclecomp/evaluator.hpp"

using namespace oc;

namespace {
const auto all_true = total_oracle<Nat, bool>([](const Nat&) { return true; });
}

TEST_CASE("delta stops at an output") {
  FixedTree<Nat, bool, Nat> root([](const std::vector<bool>&) { return out<Nat, Nat>(7); });
  auto r = delta(root, FnOracle<Nat, bool>{}, Budget{0, 0});
  REQUIRE(r.as_output());
  CHECK(r.as_output()->value == 7);
  CHECK(r.transcript().size() == 0);
}

TEST_CASE("delta on the threshold tree") {
  auto sigma = threshold_tree().at(3);
  auto pending = delta(sigma, all_true, Budget{0, 10});
  REQUIRE(pending.as_question());
  CHECK(pending.as_question()->question == 0);

  auto done = delta(sigma, all_true, Budget{3, 10});
  REQUIRE(done.as_output());
  CHECK(done.as_output()->value == true);
  CHECK(done.transcript() == Transcript<Nat, bool>{{0, 1, 2}, {true, true, true}});

  auto e = enumerate_transcripts(sigma, TableOracle<Nat, bool>{{{0, {true}}, {1, {true}}, {2, {true}}}},
                                 8, 10);
  CHECK(e.outputs() == std::vector<bool>{true});
}

TEST_CASE("delta times out on a diverging node") {
  auto sigma = threshold_tree().at(3);
  auto no = total_oracle<Nat, bool>([](const Nat&) { return false; });
  auto r = delta(sigma, no, Budget{5, 100});
  CHECK(r.timed_out());
  CHECK(r.transcript() == Transcript<Nat, bool>{{0}, {false}});
}

TEST_CASE("run_core") {
  auto tau = threshold_tree();
  CHECK(run_core(tau, all_true, Nat{3}).eval(100) == std::optional<bool>(true));
  auto one_false = total_oracle<Nat, bool>([](const Nat& q) { return q != 1; });
  for (Fuel n = 0; n <= 200; n += 10) CHECK_FALSE(run_core(tau, one_false, Nat{3}).eval(n));
  Tree<Nat, Nat, bool, Nat> root([](const Nat&, const std::vector<bool>&) {
    return out<Nat, Nat>(11);
  });
  FnOracle<Nat, bool> nothing{[](const Nat&) { return undef<bool>(); }};
  CHECK(run_core(root, nothing, Nat{0}).eval(5) == std::optional<Nat>(11));
}

TEST_CASE("extract_modulus") {
  auto m = extract_modulus(threshold_tree().at(3), all_true, Budget{5, 10});
  REQUIRE(m);
  CHECK(*m == std::vector<Nat>{0, 1, 2});
  FixedTree<Nat, bool, Nat> root([](const std::vector<bool>&) { return out<Nat, Nat>(1); });
  auto empty = extract_modulus(root, all_true, Budget{0, 0});
  REQUIRE(empty);
  CHECK(empty->empty());
}

TEST_CASE("delta and enumeration agree on random trees") {
  for (const auto& r : {checks::interrogation_equivalence({3, 40}), checks::prefix_determinacy({3, 40}),
                        checks::concatenation_law({3, 40}), checks::modulus_property({3, 40})}) {
    INFO(r.name << ": " << r.counterexample);
    CHECK(r.passed);
  }
}
