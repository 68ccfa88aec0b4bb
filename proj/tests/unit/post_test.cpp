#include <doctest.h>

#include "oraclecomp/checks/suites.hpp"
#include "oraclecomp/post.hpp"

using namespace oc;

namespace {

bool even(const Nat& x) { return x % 2 == 0; }

OracleSemiDecider<Nat, Nat> parity_side(bool member) {
  return sdec_from_plain<Nat, Nat>(from_step_indexed<Nat>(
      [member](const Nat& x, Nat n) { return even(x) == member && n >= x; }));
}

// Executes a stalling tree directly, one step at a time.
template <class S>
std::optional<bool> run_stalling(const StallTree<S, Nat, Nat, bool, bool>& t, Nat x,
                                 const FnOracle<Nat, bool>& f, Fuel fuel, std::size_t steps) {
  S s = t.start;
  std::vector<bool> ans;
  for (std::size_t k = 0; k < steps; ++k) {
    auto node = t.apply(x, s, ans).eval(fuel);
    if (!node) return std::nullopt;
    if (const auto* o = std::get_if<Out<bool>>(&*node)) return o->o;
    auto& step = std::get<StallStep<S, Nat>>(*node);
    if (step.q) {
      auto a = f(*step.q).eval(fuel);
      if (!a) return std::nullopt;
      ans.push_back(*a);
    }
    s = step.state;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("getas picks the answers owned by one side") {
  std::vector<std::pair<bool, Nat>> tags{{true, 3}, {false, 7}};
  std::vector<char> ans{'a', 'b'};
  CHECK(getas(true, tags, ans) == std::vector<char>{'a'});
  CHECK(getas(false, tags, ans) == std::vector<char>{'b'});
  CHECK(getas(true, std::vector<std::pair<bool, Nat>>{}, std::vector<char>{}).empty());
}

TEST_CASE("evens via two parity semi-deciders") {
  auto r = pt_reduce(parity_side(true), parity_side(false));
  auto trivial = total_oracle<Nat, bool>([](const Nat&) { return true; });
  for (Nat x = 0; x <= 50; ++x) {
    auto out = delta(r.tree.at(x), trivial, Budget{4, 256});
    CHECK(out.value() == std::optional<bool>(even(x)));
    CHECK(out.transcript().size() == 0);
  }
}

TEST_CASE("elaborated and stalling executions agree") {
  auto st = pt_tree(parity_side(true).tree, parity_side(false).tree);
  auto plain = stall_to_plain(st);
  auto trivial = total_oracle<Nat, bool>([](const Nat&) { return true; });
  for (Nat x = 0; x <= 20; ++x) {
    CHECK(run_stalling(st, x, trivial, 256, 200) == delta(plain.at(x), trivial, Budget{4, 256}).value());
  }
}

TEST_CASE("both sides silent") {
  auto silent = sdec_from_plain<Nat, Nat>([](const Nat&) { return undef<Unit>(); });
  auto r = pt_reduce(silent, silent);
  auto trivial = total_oracle<Nat, bool>([](const Nat&) { return true; });
  for (Fuel n : {0, 8, 64, 256}) CHECK(delta(r.tree.at(3), trivial, Budget{n, n}).timed_out());
}

TEST_CASE("Post fixtures") {
  auto r = checks::post_theorem_fixtures();
  INFO(r.counterexample);
  CHECK(r.passed);
}

TEST_CASE("decidability transport") {
  auto r = checks::decidability_transport();
  INFO(r.counterexample);
  CHECK(r.passed);
}
