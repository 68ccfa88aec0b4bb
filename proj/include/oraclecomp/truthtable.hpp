#pragma once

// Truth-table reductions and the deficiency-predicate reduction.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "oraclecomp/reducibility.hpp"

namespace oc {

// How an answer vector selects a table row. big_endian reads the first answer
// as the most significant bit; little_endian exists only as a negative
// control for the self-test.
enum class TableIndexing { big_endian, little_endian };

// The table row selected by the answers. Throws std::invalid_argument unless |table| = 2^|answers|.
bool tt_eval(const std::vector<bool>& answers, const std::vector<bool>& table,
             TableIndexing indexing = TableIndexing::big_endian);

template <class L, class R, class Rel>
bool forall2(Rel rel, const std::vector<L>& left, const std::vector<R>& right) {
  if (left.size() != right.size()) return false;
  for (std::size_t k = 0; k < left.size(); ++k) {
    if (!rel(left[k], right[k])) return false;
  }
  return true;
}

template <class X, class Y>
struct TruthTable {
  std::function<std::vector<Y>(const X&)> queries;
  std::function<std::vector<bool>(const X&)> table;
};

// Asks queries(x) in order, then evaluates the table on the answers.
template <class X, class Y>
TuringReduction<X, Y> tt_to_turing(TruthTable<X, Y> t,
                                   TableIndexing indexing = TableIndexing::big_endian) {
  return {Tree<X, Y, bool, bool>(
      [t = std::move(t), indexing](const X& x, const std::vector<bool>& ans) {
        auto qs = t.queries(x);
        if (ans.size() < qs.size()) return ask<Y, bool>(qs[ans.size()]);
        std::vector<bool> used(ans.begin(), ans.begin() + static_cast<std::ptrdiff_t>(qs.size()));
        return out<Y, bool>(tt_eval(used, t.table(x), indexing));
      })};
}

// An injective enumerator e of I = range(e).
struct Enumerator {
  std::string name;
  std::function<Nat(Nat)> e;

  Nat operator()(Nat n) const { return e(n); }
};

Enumerator doubling_enumerator();  // n ↦ 2n: range evens, no deficient points
Enumerator xor1_enumerator();      // n ↦ n xor 1: range ℕ, deficient exactly at evens

enum class Deficiency { deficient, not_found_up_to_bound };

// Looks for a witness x < x0 ≤ bound with e(x0) < e(x).
Deficiency deficiency(const Enumerator& e, Nat x, Nat bound);

// z ∈ [e(0), …, e(x+1)]
bool window_membership(const Enumerator& e, Nat z, Nat x);

// Reduces the range of e to its deficiency set: asks 0, 1, 2, … and stops at the first x answered false with
// e(x) > z; then z ∈ I iff z occurs among e(0), …, e(x+1).
TuringReduction<Nat, Nat> deficiency_reduction(const Enumerator& e);

}  // namespace oc
