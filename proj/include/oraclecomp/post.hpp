#pragma once

// Relativised Post's theorem: semi-deciders for p and for its complement,
// both relative to q, dovetailed into a Turing reduction p ⪯_T q.

#include <optional>
#include <utility>
#include <vector>

#include "oraclecomp/combinators.hpp"
#include "oraclecomp/reducibility.hpp"

namespace oc {

// pending: a question of the second semi-decider still to be asked.
// step_index: evaluation fuel used for both semi-deciders in the current round.
// tags: owner of each asked question, true for the first semi-decider.
template <class Y>
struct DovetailState {
  std::optional<Y> pending;
  Nat step_index = 0;
  std::vector<std::pair<bool, Y>> tags;
};

// The answers at positions owned by `which`.
template <class Y, class A>
std::vector<A> getas(bool which, const std::vector<std::pair<bool, Y>>& tags,
                     const std::vector<A>& ans) {
  std::vector<A> picked;
  const std::size_t n = std::min(tags.size(), ans.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (tags[k].first == which) picked.push_back(ans[k]);
  }
  return picked;
}

template <class X, class Y>
StallTree<DovetailState<Y>, X, Y, bool, bool> pt_tree(Tree<X, Y, bool, Unit> first,
                                                      Tree<X, Y, bool, Unit> second) {
  using S = DovetailState<Y>;
  return {[first = std::move(first), second = std::move(second)](
              const X& x, const S& s, const std::vector<bool>& ans)
              -> Partial<StallNode<S, Y, bool>> {
            if (s.pending) {
              S next{std::nullopt, s.step_index, s.tags};
              next.tags.emplace_back(false, *s.pending);
              return stall_ask<S, Y, bool>(std::move(next), *s.pending);
            }
            const Nat n = s.step_index;
            auto x1 = first(x, getas(true, s.tags, ans)).eval(n);
            auto x2 = second(x, getas(false, s.tags, ans)).eval(n);
            if (x1 && output(*x1)) return stall_out<S, Y, bool>(true);
            if (x2 && output(*x2)) return stall_out<S, Y, bool>(false);
            const Y* q1 = x1 ? asked(*x1) : nullptr;
            const Y* q2 = x2 ? asked(*x2) : nullptr;
            S next{std::nullopt, n + 1, s.tags};
            if (q1 && q2) {
              next.pending = *q2;
              next.tags.emplace_back(true, *q1);
              return stall_ask<S, Y, bool>(std::move(next), *q1);
            }
            if (q1) {
              next.tags.emplace_back(true, *q1);
              return stall_ask<S, Y, bool>(std::move(next), *q1);
            }
            if (q2) {
              next.tags.emplace_back(false, *q2);
              return stall_ask<S, Y, bool>(std::move(next), *q2);
            }
            return stall<S, Y, bool>(std::move(next));
          },
          S{}};
}

template <class X, class Y>
TuringReduction<X, Y> pt_reduce(const OracleSemiDecider<X, Y>& member,
                                const OracleSemiDecider<X, Y>& nonmember) {
  return {stall_to_plain(pt_tree(member.tree, nonmember.tree))};
}

}  // namespace oc
