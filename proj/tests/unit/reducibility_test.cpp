#include <doctest.h>

#include "oraclecomp/reducibility.hpp"

using namespace oc;

namespace {

bool even(const Nat& x) { return x % 2 == 0; }

const std::function<bool(const Nat&)> evens = even;

template <class X, class Y>
std::optional<bool> verdict(const TuringReduction<X, Y>& r, const FnOracle<Y, bool>& f, const X& x) {
  return delta(r.tree.at(x), f, Budget{16, 512}).value();
}

// Whether a semi-decider halts at x against f.
template <class X, class Y>
bool halts(const OracleSemiDecider<X, Y>& s, const FnOracle<Y, bool>& f, const X& x) {
  return run_core(s.tree, f, x).eval(256).has_value();
}

}  // namespace

TEST_CASE("characteristic oracles") {
  auto f = char_oracle<Nat>(evens);
  CHECK(verdict(reduce_refl<Nat>(), f, Nat{4}) == std::optional<bool>(true));
  CHECK(verdict(reduce_refl<Nat>(), f, Nat{3}) == std::optional<bool>(false));
  auto t = char_table<Nat>(evens, {0, 1, 2});
  CHECK(t.entries.size() == 3);
  CHECK(*t.answers_for(2) == std::vector<bool>{true});
}

TEST_CASE("complement") {
  auto f = char_oracle<Nat>(evens);
  CHECK(verdict(complement_reduction<Nat>(), f, Nat{2}) == std::optional<bool>(false));
  CHECK(verdict(complement_reduction<Nat>(), f, Nat{3}) == std::optional<bool>(true));
}

TEST_CASE("transitivity composes reductions") {
  auto f = char_oracle<Nat>(evens);
  auto shift = manyone_to_turing<Nat, Nat>([](const Nat& x) { return x + 1; });
  auto neg = complement_reduction<Nat>();
  auto both = reduce_trans(shift, neg);  // p x = ¬evens(x+1) = evens(x)
  for (Nat x = 0; x < 10; ++x) CHECK(verdict(both, f, x) == std::optional<bool>(even(x)));
}

TEST_CASE("join over injections") {
  auto odds = complement_reduction<Nat>();
  auto j = join(reduce_refl<Nat>(), odds);
  auto f = char_oracle<Nat>(evens);
  CHECK(verdict(j, f, Sum<Nat, Nat>(Inl<Nat>{2})) == std::optional<bool>(true));
  CHECK(verdict(j, f, Sum<Nat, Nat>(Inr<Nat>{2})) == std::optional<bool>(false));

  using S = Sum<Nat, Nat>;
  auto sum_oracle = total_oracle<S, bool>([](const S& s) {
    if (const auto* l = std::get_if<Inl<Nat>>(&s)) return even(l->value);
    return !even(std::get<Inr<Nat>>(s).value);
  });
  auto left = inject_left<Nat, Nat>();
  auto right = inject_right<Nat, Nat>();
  for (Nat x = 0; x < 6; ++x) {
    CHECK(verdict(left, sum_oracle, x) == std::optional<bool>(even(x)));
    CHECK(verdict(right, sum_oracle, x) == std::optional<bool>(!even(x)));
  }
}

TEST_CASE("manyone reductions") {
  auto r = manyone_to_turing<Nat, Nat>([](const Nat& x) { return x + 1; });
  auto d = decide_via_reduction(r, evens, {1}, Budget{8, 64});
  CHECK(d[0].verdict == Decision::yes);
}

TEST_CASE("semi-deciders from plain partial functions") {
  auto s = sdec_from_plain<Nat, Nat>(
      from_step_indexed<Nat>([](const Nat& x, Nat n) { return even(x) && n >= x; }));
  auto f = char_oracle<Nat>(evens);
  auto r2 = delta(s.tree.at(2), f, Budget{0, 64});
  CHECK(r2.as_output());
  CHECK(r2.transcript().size() == 0);
  CHECK(delta(s.tree.at(3), f, Budget{0, 1000}).timed_out());

  auto never = sdec_from_plain<Nat, Nat>([](const Nat&) { return undef<Unit>(); });
  for (Nat x = 0; x < 5; ++x) CHECK_FALSE(halts(never, f, x));
}

TEST_CASE("Turing reductions split into semi-deciders") {
  auto pair = turing_to_sdec(reduce_refl<Nat>());
  auto f = char_oracle<Nat>(evens);
  for (Nat x = 0; x <= 20; ++x) {
    CHECK(halts(pair.member, f, x) == even(x));
    CHECK(halts(pair.complement, f, x) == !even(x));
  }
  auto quiet = sdec_from_plain<Nat, Nat>(
      from_step_indexed<Nat>([](const Nat& x, Nat) { return x < 3; }));
  for (Nat x = 0; x < 6; ++x) CHECK(halts(quiet, f, x) == (x < 3));
  auto flipped = turing_to_sdec(complement_reduction<Nat>());
  for (Nat x = 0; x <= 10; ++x) CHECK(halts(flipped.member, f, x) == !even(x));
}

TEST_CASE("semi-deciders as plain partial functions") {
  auto member = turing_to_sdec(reduce_refl<Nat>()).member;
  auto plain = sdec_to_plain(member, evens);
  CHECK(plain(4).eval(256).has_value());
  CHECK_FALSE(plain(5).eval(256).has_value());
}

TEST_CASE("transport of semi-deciders") {
  auto member = turing_to_sdec(reduce_refl<Nat>()).member;
  auto f = char_oracle<Nat>(evens);
  auto same = sdec_transport_turing(member, reduce_refl<Nat>());
  for (Nat x = 0; x < 8; ++x) CHECK(halts(same, f, x) == halts(member, f, x));

  auto unchanged = sdec_transport_manyone<Nat>(member, [](const Nat& x) { return x; });
  for (Nat x = 0; x < 8; ++x) CHECK(halts(unchanged, f, x) == even(x));

  // evens relative to q, shifted: halts at x iff x+2 is even
  auto shifted = sdec_transport_manyone<Nat>(member, [](const Nat& x) { return x + 2; });
  for (Nat x = 0; x < 8; ++x) CHECK(halts(shifted, f, x) == even(x + 2));

  auto pinned = sdec_transport_manyone<Nat>(member, [](const Nat&) { return Nat{4}; });
  for (Nat x = 0; x < 8; ++x) CHECK(halts(pinned, f, x));
}

TEST_CASE("bi-semidecidable predicates are decidable") {
  auto r = bisemidec_to_turing<Nat, Nat>([](const Nat& x, Nat n) { return even(x) && n >= x; },
                                         [](const Nat& x, Nat n) { return !even(x) && n >= x; });
  auto f = char_oracle<Nat>(evens);
  for (Nat x = 0; x < 12; ++x) CHECK(verdict(r, f, x) == std::optional<bool>(even(x)));

  auto stuck = bisemidec_to_turing<Nat, Nat>([](const Nat& x, Nat) { return x == 0; },
                                             [](const Nat&, Nat) { return false; });
  for (Fuel n : {0, 5, 50, 500}) CHECK(delta(stuck.tree.at(1), f, Budget{n, n}).timed_out());
}

TEST_CASE("decide_via_reduction") {
  std::vector<Nat> xs{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  for (const auto& d : decide_via_reduction(reduce_refl<Nat>(), evens, xs, Budget{8, 64})) {
    CHECK(d.verdict == (even(d.x) ? Decision::yes : Decision::no));
  }
  TuringReduction<Nat, Nat> diverging{nowhere<Nat, Nat, bool, bool>()};
  for (const auto& d : decide_via_reduction(diverging, evens, xs, Budget{8, 64})) {
    CHECK(d.verdict == Decision::timeout);
  }
  CHECK(std::string(to_string(Decision::yes)) == "true");
  CHECK(std::string(to_string(Decision::timeout)) == "timeout");
}
