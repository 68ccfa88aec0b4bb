#pragma once

// Fuel-bounded evaluation of trees against partial-function oracles.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "oraclecomp/partial.hpp"
#include "oraclecomp/tree.hpp"

namespace oc {

struct Budget {
  Nat question_fuel = 0;  // max oracle questions
  Fuel step_fuel = 0;     // fuel for each partial value
};

template <class Q, class A, class O>
struct RunOutput {
  O value;
  Transcript<Q, A> transcript;
};

template <class Q, class A>
struct RunNeedQuestion {
  Q question;
  Transcript<Q, A> transcript;
};

template <class Q, class A>
struct RunTimeout {
  Transcript<Q, A> transcript;  // questions answered before fuel ran out
};

template <class Q, class A, class O>
struct RunOutcome {
  std::variant<RunOutput<Q, A, O>, RunNeedQuestion<Q, A>, RunTimeout<Q, A>> result;

  const RunOutput<Q, A, O>* as_output() const {
    return std::get_if<RunOutput<Q, A, O>>(&result);
  }
  const RunNeedQuestion<Q, A>* as_question() const {
    return std::get_if<RunNeedQuestion<Q, A>>(&result);
  }
  bool timed_out() const { return std::holds_alternative<RunTimeout<Q, A>>(result); }

  std::optional<O> value() const {
    if (const auto* o = as_output()) return o->value;
    return std::nullopt;
  }

  const Transcript<Q, A>& transcript() const {
    return std::visit([](const auto& r) -> const Transcript<Q, A>& { return r.transcript; },
                      result);
  }
};

// Reads the node after the answers so far, stops on an output, stops with the pending
// question once question_fuel answers have been consumed, otherwise asks f and
// descends into the answered subtree.
template <class Q, class A, class O>
RunOutcome<Q, A, O> delta(const FixedTree<Q, A, O>& sigma, const FnOracle<Q, A>& f,
                          Budget budget) {
  Transcript<Q, A> t;
  Nat remaining = budget.question_fuel;
  for (;;) {
    auto node = sigma(t.ans).eval(budget.step_fuel);
    if (!node) return {RunTimeout<Q, A>{std::move(t)}};
    if (const O* o = output(*node)) return {RunOutput<Q, A, O>{*o, std::move(t)}};
    const Q& q = *asked(*node);
    if (remaining == 0) return {RunNeedQuestion<Q, A>{q, std::move(t)}};
    auto a = f(q).eval(budget.step_fuel);
    if (!a) return {RunTimeout<Q, A>{std::move(t)}};
    t.qs.push_back(q);
    t.ans.push_back(std::move(*a));
    --remaining;
  }
}

// Computational core: μ-search for the first diagonal budget (k, k) at
// which delta outputs, then return that output.
template <class I, class Q, class A, class O>
Partial<O> run_core(const Tree<I, Q, A, O>& tau, const FnOracle<Q, A>& f, const I& i) {
  auto sigma = tau.at(i);
  auto probe = [sigma, f](Nat k) {
    return delta(sigma, f, Budget{k, k});
  };
  return mu([probe](Nat k) { return ret(probe(k).as_output() != nullptr); })
      .bind([probe](const Nat& k) { return ret(O(*probe(k).value())); });
}

// The question list of a converging run; the output depends on the oracle
// only at these questions.
template <class Q, class A, class O>
std::optional<std::vector<Q>> extract_modulus(const FixedTree<Q, A, O>& sigma,
                                              const FnOracle<Q, A>& f, Budget budget) {
  auto r = delta(sigma, f, budget);
  if (const auto* o = r.as_output()) return o->transcript.qs;
  return std::nullopt;
}

}  // namespace oc
