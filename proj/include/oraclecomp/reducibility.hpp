#pragma once

// Turing reductions and oracle semi-deciders over characteristic oracles.

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "oraclecomp/combinators.hpp"
#include "oraclecomp/evaluator.hpp"
#include "oraclecomp/partial.hpp"
#include "oraclecomp/tree.hpp"

namespace oc {

template <class X>
struct Inl {
  X value;
  friend bool operator==(const Inl&, const Inl&) = default;
};

template <class Y>
struct Inr {
  Y value;
  friend bool operator==(const Inr&, const Inr&) = default;
};

template <class X, class Y>
using Sum = std::variant<Inl<X>, Inr<Y>>;

// Characteristic function of a predicate, as an oracle.
template <class X>
FnOracle<X, bool> char_oracle(std::function<bool(const X&)> pred) {
  return total_oracle<X, bool>(std::move(pred));
}

// The same, restricted to a finite domain, as a table.
template <class X>
TableOracle<X, bool> char_table(const std::function<bool(const X&)>& pred,
                                const std::vector<X>& domain) {
  TableOracle<X, bool> t;
  for (const X& x : domain) t.entries.push_back({x, {pred(x)}});
  return t;
}

// p ⪯_T q, stored as its tree only.
template <class X, class Y>
struct TuringReduction {
  Tree<X, Y, bool, bool> tree;
};

// S_q(p): outputs ⋆ exactly on members of p.
template <class X, class Y>
struct OracleSemiDecider {
  Tree<X, Y, bool, Unit> tree;
};

template <class X>
TuringReduction<X, X> reduce_refl() {
  return {ident<X, bool>()};
}

// p ⪯_T q and q ⪯_T r give p ⪯_T r: every q-question of the first
// reduction is answered by running the second against the r-oracle.
template <class X, class Y, class Z>
TuringReduction<X, Z> reduce_trans(const TuringReduction<X, Y>& p_to_q,
                                   const TuringReduction<Y, Z>& q_to_r) {
  return {compose_trees(q_to_r.tree, p_to_q.tree)};
}

template <class X, class Y>
TuringReduction<X, Sum<X, Y>> inject_left() {
  return {precompose<X>([](const X& x) { return Sum<X, Y>(Inl<X>{x}); },
                        ident<Sum<X, Y>, bool>())};
}

template <class X, class Y>
TuringReduction<Y, Sum<X, Y>> inject_right() {
  return {precompose<Y>([](const Y& y) { return Sum<X, Y>(Inr<Y>{y}); },
                        ident<Sum<X, Y>, bool>())};
}

template <class X, class Y, class Z>
TuringReduction<Sum<X, Y>, Z> join(const TuringReduction<X, Z>& rp,
                                   const TuringReduction<Y, Z>& rq) {
  return {Tree<Sum<X, Y>, Z, bool, bool>(
      [left = rp.tree, right = rq.tree](const Sum<X, Y>& z, const std::vector<bool>& ans) {
        if (const auto* l = std::get_if<Inl<X>>(&z)) return left(l->value, ans);
        return right(std::get<Inr<Y>>(z).value, ans);
      })};
}

template <class X, class Y, class F>
TuringReduction<X, Y> manyone_to_turing(F f) {
  return {precompose<X>(std::move(f), ident<Y, bool>())};
}

// Asks x and negates the answer; built from bind, identity and a total
// function.
template <class X>
TuringReduction<X, X> complement_reduction() {
  return {seq_bind(ident<X, bool>(),
                   of_total<std::pair<X, bool>, X, bool, bool>(
                       [](const std::pair<X, bool>& xb) { return !xb.second; }))};
}

namespace detail {

template <class X, class Y>
OracleSemiDecider<X, Y> accept_on(const TuringReduction<X, Y>& r, bool verdict) {
  return {Tree<X, Y, bool, Unit>(
      [tree = r.tree, verdict](const X& x, const std::vector<bool>& ans) {
        return tree(x, ans).bind([verdict](const Node<Y, bool>& n) -> Partial<Node<Y, Unit>> {
          if (const Y* y = asked(n)) return ask<Y, Unit>(*y);
          if (*output(n) == verdict) return out<Y, Unit>(star);
          return undef<Node<Y, Unit>>();
        });
      })};
}

}  // namespace detail

template <class X, class Y>
struct SemiDeciderPair {
  OracleSemiDecider<X, Y> member;
  OracleSemiDecider<X, Y> complement;
};

template <class X, class Y>
SemiDeciderPair<X, Y> turing_to_sdec(const TuringReduction<X, Y>& r) {
  return {detail::accept_on(r, true), detail::accept_on(r, false)};
}

template <class X, class Y>
OracleSemiDecider<X, Y> sdec_from_plain(std::function<Partial<Unit>(const X&)> s) {
  return {of_partial_fn<X, Y, bool, Unit>(std::move(s))};
}

// A step-indexed semi-decider as a partial one: converges once some step fires.
template <class X>
std::function<Partial<Unit>(const X&)> from_step_indexed(
    std::function<bool(const X&, Nat)> fires) {
  return [fires = std::move(fires)](const X& x) {
    return mu([fires, x](Nat n) { return ret(fires(x, n)); })
        .map([](const Nat&) { return star; });
  };
}

template <class X, class Y>
std::function<Partial<Unit>(const X&)> sdec_to_plain(const OracleSemiDecider<X, Y>& s,
                                                     std::function<bool(const Y&)> decide_q) {
  auto f = char_oracle<Y>(std::move(decide_q));
  return [tree = s.tree, f](const X& x) { return run_core(tree, f, x); };
}

template <class X, class Y, class Y2>
OracleSemiDecider<X, Y2> sdec_transport_turing(const OracleSemiDecider<X, Y>& s,
                                               const TuringReduction<Y, Y2>& r) {
  return {compose_trees(r.tree, s.tree)};
}

template <class X2, class X, class Y, class F>
OracleSemiDecider<X2, Y> sdec_transport_manyone(const OracleSemiDecider<X, Y>& s, F f) {
  return {precompose<X2>(std::move(f), s.tree)};
}

// Ignores the oracle; searches the least step at which either side fires and
// reports whether it was the member side.
template <class X, class Y>
TuringReduction<X, Y> bisemidec_to_turing(std::function<bool(const X&, Nat)> member,
                                          std::function<bool(const X&, Nat)> nonmember) {
  return {of_partial_fn<X, Y, bool, bool>([member, nonmember](const X& x) {
    return mu([member, nonmember, x](Nat n) { return ret(member(x, n) || nonmember(x, n)); })
        .map([member, x](const Nat& n) { return member(x, n); });
  })};
}

enum class Decision { yes, no, timeout };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "true";
    case Decision::no: return "false";
    case Decision::timeout: return "timeout";
  }
  return "timeout";
}

template <class X>
struct DecisionEntry {
  X x;
  Decision verdict;
};

// Budgeted decider obtained by running the computational core of r against
// the oracle. The core's diagonal uses a single fuel, taken from
// budget.step_fuel.
template <class X, class Y>
std::vector<DecisionEntry<X>> decide_via_reduction(const TuringReduction<X, Y>& r,
                                                   const FnOracle<Y, bool>& f,
                                                   const std::vector<X>& xs, Budget budget) {
  std::vector<DecisionEntry<X>> verdicts;
  verdicts.reserve(xs.size());
  for (const X& x : xs) {
    auto v = run_core(r.tree, f, x).eval(budget.step_fuel);
    verdicts.push_back({x, !v ? Decision::timeout : (*v ? Decision::yes : Decision::no)});
  }
  return verdicts;
}

template <class X, class Y>
std::vector<DecisionEntry<X>> decide_via_reduction(const TuringReduction<X, Y>& r,
                                                   std::function<bool(const Y&)> decide_q,
                                                   const std::vector<X>& xs, Budget budget) {
  return decide_via_reduction(r, char_oracle<Y>(std::move(decide_q)), xs, budget);
}

}  // namespace oc
