#include <doctest.h>

#include <memory>

#include "oraclecomp/checks/fixtures.hpp"
#include "oraclecomp/checks/suites.hpp"
#include "oraclecomp/combinators.hpp"
#include "oraclecomp/evaluator.hpp"

using namespace oc;

namespace {

const Budget ample{16, 512};

const auto all_true = total_oracle<Nat, bool>([](const Nat&) { return true; });

template <class I, class Q, class A, class O>
RunOutcome<Q, A, O> run(const Tree<I, Q, A, O>& t, const I& i, const FnOracle<Q, A>& f,
                        Budget b = ample) {
  return delta(t.at(i), f, b);
}

}  // namespace

TEST_CASE("precompose with the identity") {
  auto t = precompose<Nat>([](const Nat& i) { return i; }, threshold_tree());
  for (Nat i = 0; i < 5; ++i) {
    CHECK(run(t, i, all_true).transcript() == run(threshold_tree(), i, all_true).transcript());
  }
  auto shifted = precompose<Nat>([](const Nat& i) { return i + 2; }, threshold_tree());
  CHECK(run(shifted, Nat{1}, all_true).transcript().size() == 3);
}

TEST_CASE("lifted functions never ask") {
  auto dbl = of_total<Nat, Nat, bool, Nat>([](const Nat& i) { return 2 * i; });
  auto r = run(dbl, Nat{3}, all_true);
  REQUIRE(r.as_output());
  CHECK(r.as_output()->value == 6);
  CHECK(r.transcript().size() == 0);

  auto never = nowhere<Nat, Nat, bool, Nat>();
  for (Fuel n : {0, 1, 10, 1000}) CHECK(run(never, Nat{3}, all_true, Budget{n, n}).timed_out());

  auto yes = constant<Nat, Nat, bool, bool>(true);
  for (Nat i = 0; i < 4; ++i) CHECK(run(yes, i, all_true).value() == std::optional<bool>(true));
}

TEST_CASE("ident relays one answer") {
  auto id = ident<Nat, Nat>();
  auto succ = total_oracle<Nat, Nat>([](const Nat& q) { return q + 1; });
  auto r = run(id, Nat{5}, succ);
  CHECK(r.value() == std::optional<Nat>(6));
  CHECK(r.transcript() == Transcript<Nat, Nat>{{5}, {6}});

  auto e = enumerate_transcripts(id.at(3), TableOracle<Nat, Nat>{}, 4, 4);
  REQUIRE(e.runs.size() == 1);
  CHECK(e.runs[0].transcript.size() == 0);
  CHECK(e.outputs().empty());

  CHECK(run(ident<Nat, bool>(), Nat{0}, all_true).value() == std::optional<bool>(true));
}

TEST_CASE("ite") {
  auto even = [](const Nat& i) { return i % 2 == 0; };
  auto t = ite([](const Nat&) { return true; }, threshold_tree(),
               constant<Nat, Nat, bool, bool>(false));
  CHECK(run(t, Nat{2}, all_true).transcript() == run(threshold_tree(), Nat{2}, all_true).transcript());

  auto parity = ite(even, constant<Nat, Nat, bool, bool>(true), constant<Nat, Nat, bool, bool>(false));
  for (Nat i = 0; i < 10; ++i) {
    auto r = run(parity, i, all_true);
    CHECK(r.value() == std::optional<bool>(i % 2 == 0));
    CHECK(r.transcript().size() == 0);
  }

  auto mixed = ite(even, ident<Nat, bool>(), constant<Nat, Nat, bool, bool>(false));
  auto r = run(mixed, Nat{2}, all_true);
  CHECK(r.value() == std::optional<bool>(true));
  CHECK(r.transcript().qs == std::vector<Nat>{2});
}

TEST_CASE("seq_bind") {
  using P = std::pair<Nat, Nat>;
  auto seven = constant<Nat, Nat, Nat, Nat>(7);
  auto succ = of_total<P, Nat, Nat, Nat>([](const P& io) { return io.second + 1; });
  auto r = run(seq_bind(seven, succ), Nat{0}, total_oracle<Nat, Nat>([](const Nat& q) { return q; }));
  CHECK(r.value() == std::optional<Nat>(8));
  CHECK(r.transcript().size() == 0);

  auto relay = of_total<P, Nat, Nat, Nat>([](const P& io) { return io.second; });
  auto tens = total_oracle<Nat, Nat>([](const Nat& q) { return q * 10; });
  auto s = run(seq_bind(ident<Nat, Nat>(), relay), Nat{4}, tens);
  CHECK(s.value() == std::optional<Nat>(40));
  CHECK(s.transcript() == Transcript<Nat, Nat>{{4}, {40}});

  auto stuck = seq_bind(nowhere<Nat, Nat, Nat, Nat>(), relay);
  for (Fuel n : {0, 10, 1000}) CHECK(run(stuck, Nat{1}, tens, Budget{n, n}).timed_out());
}

TEST_CASE("seq_bind hands the second tree only its own answers") {
  using P = std::pair<Nat, Nat>;
  // second asks o+100 and outputs its answer
  Tree<P, Nat, Nat, Nat> ask_shifted([](const P& io, const std::vector<Nat>& ans) {
    if (ans.empty()) return ask<Nat, Nat>(io.second + 100);
    return out<Nat, Nat>(Nat{ans.front()});
  });
  auto sq = total_oracle<Nat, Nat>([](const Nat& q) { return q * q; });
  auto r = run(seq_bind(ident<Nat, Nat>(), ask_shifted), Nat{3}, sq);
  CHECK(r.value() == std::optional<Nat>(109 * 109));
  CHECK(r.transcript().qs == std::vector<Nat>{3, 109});
}

TEST_CASE("compose_trees") {
  // ident over ident is ident, checked on every table over {0,1,2}
  auto id = ident<Nat, Nat>();
  auto both = compose_trees(id, id);
  for (const auto& fn : checks::all_partial_functions(3, 3)) {
    auto table = checks::to_table(fn);
    for (Nat i = 0; i < 3; ++i) {
      auto a = enumerate_transcripts(both.at(i), table, 8, 512);
      auto b = enumerate_transcripts(id.at(i), table, 8, 512);
      CHECK(checks::to_set(a.outputs()) == checks::to_set(b.outputs()));
    }
  }

  auto quiet = compose_trees(id, constant<Nat, Nat, Nat, Nat>(9));
  auto r = run(quiet, Nat{1}, total_oracle<Nat, Nat>([](const Nat& q) { return q; }));
  CHECK(r.value() == std::optional<Nat>(9));
  CHECK(r.transcript().size() == 0);

  auto positive = of_total<Nat, Nat, bool, bool>([](const Nat& x) { return x > 0; });
  auto via = compose_trees(positive, ident<Nat, bool>());
  auto s = run(via, Nat{5}, total_oracle<Nat, bool>([](const Nat&) { return false; }));
  CHECK(s.value() == std::optional<bool>(true));
  CHECK(s.transcript().size() == 0);
}

TEST_CASE("search") {
  using Q = std::pair<Nat, Nat>;
  auto s = search<Nat>();
  auto from4 = total_oracle<Q, bool>([](const Q& q) { return q.second >= 4; });
  auto r = run(s, Nat{7}, from4);
  CHECK(r.value() == std::optional<Nat>(4));
  CHECK(r.transcript().qs == std::vector<Q>{{7, 0}, {7, 1}, {7, 2}, {7, 3}, {7, 4}});

  auto none = total_oracle<Q, bool>([](const Q&) { return false; });
  CHECK_FALSE(run(s, Nat{0}, none, Budget{64, 64}).value());

  auto first = total_oracle<Q, bool>([](const Q& q) { return q.second == 0; });
  auto t = run(s, Nat{2}, first);
  CHECK(t.value() == std::optional<Nat>(0));
  CHECK(t.transcript().size() == 1);
}

TEST_CASE("stalls are eliminated") {
  StallTree<Nat, Nat, Nat, bool, Nat> three{
      [](const Nat&, const Nat& s, const std::vector<bool>&) {
        if (s < 3) return stall<Nat, Nat, Nat>(s + 1);
        return stall_out<Nat, Nat, Nat>(s * 10);
      },
      0};
  auto r = run(stall_to_plain(three), Nat{0}, all_true);
  CHECK(r.value() == std::optional<Nat>(30));
  CHECK(r.transcript().size() == 0);

  StallTree<Nat, Nat, Nat, bool, Nat> forever{
      [](const Nat&, const Nat& s, const std::vector<bool>&) { return stall<Nat, Nat, Nat>(s + 1); },
      0};
  for (Fuel n : {0, 10, 300}) CHECK(run(stall_to_plain(forever), Nat{0}, all_true, Budget{n, n}).timed_out());
}

TEST_CASE("translations round-trip") {
  checks::Rng rng(5);
  const checks::TreeShape shape{3, 3, 3, 3, 2};
  for (int c = 0; c < 40; ++c) {
    auto fam = std::make_shared<const checks::Family>(checks::random_family(rng, shape, 3));
    auto plain = checks::engine_tree(fam);
    auto via_ext = ext_to_plain(plain_to_ext(plain));
    auto via_stall = stall_to_plain(ext_to_stall(plain_to_ext(plain)));
    for (const auto& fn : checks::all_partial_functions(3, 3)) {
      auto table = checks::to_table(fn);
      for (Nat i = 0; i < 3; ++i) {
        auto want = checks::to_set(enumerate_transcripts(plain.at(i), table, 8, 512).outputs());
        CHECK(checks::to_set(enumerate_transcripts(via_ext.at(i), table, 8, 512).outputs()) == want);
        CHECK(checks::to_set(enumerate_transcripts(via_stall.at(i), table, 8, 512).outputs()) == want);
      }
    }
  }
}

TEST_CASE("combinators match their relational references") {
  for (const auto& r : checks::combinator_equivalence({11, 30})) {
    INFO(r.name << ": " << r.counterexample);
    CHECK(r.passed);
  }
  auto e = checks::elaboration_soundness({11, 30});
  INFO(e.counterexample);
  CHECK(e.passed);
}
