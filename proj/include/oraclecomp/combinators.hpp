#pragma once

// Closure combinators lowering functionals to trees, together with the
// stateful (extended) and stalling tree forms and the translations between
// them.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "oraclecomp/partial.hpp"
#include "oraclecomp/tree.hpp"

namespace oc {

// ---------------------------------------------------------------------------
// Extended and stalling trees

template <class S, class Q>
struct ExtAsk {
  S state;
  Q q;
};

template <class S, class Q, class O>
using ExtNode = std::variant<ExtAsk<S, Q>, Out<O>>;

// input → state → answers ⇀ (state, question) | output, with a start state.
template <class S, class I, class Q, class A, class O>
struct ExtTree {
  using Answers = std::vector<A>;
  using Fn = std::function<Partial<ExtNode<S, Q, O>>(const I&, const S&, const Answers&)>;
  Fn apply;
  S start;
};

// Step with an empty question is a stall.
template <class S, class Q>
struct StallStep {
  S state;
  std::optional<Q> q;
};

template <class S, class Q, class O>
using StallNode = std::variant<StallStep<S, Q>, Out<O>>;

template <class S, class I, class Q, class A, class O>
struct StallTree {
  using Answers = std::vector<A>;
  using Fn = std::function<Partial<StallNode<S, Q, O>>(const I&, const S&, const Answers&)>;
  Fn apply;
  S start;
};

template <class S, class Q, class O>
Partial<StallNode<S, Q, O>> stall(S s) {
  return ret(StallNode<S, Q, O>(StallStep<S, Q>{std::move(s), std::nullopt}));
}

template <class S, class Q, class O>
Partial<StallNode<S, Q, O>> stall_ask(S s, Q q) {
  return ret(StallNode<S, Q, O>(StallStep<S, Q>{std::move(s), std::move(q)}));
}

template <class S, class Q, class O>
Partial<StallNode<S, Q, O>> stall_out(O o) {
  return ret(StallNode<S, Q, O>(Out<O>{std::move(o)}));
}

template <class I, class Q, class A, class O>
ExtTree<Unit, I, Q, A, O> plain_to_ext(Tree<I, Q, A, O> tau) {
  using N = ExtNode<Unit, Q, O>;
  return {[tau = std::move(tau)](const I& i, const Unit& s, const std::vector<A>& ans) {
            return tau(i, ans).bind([s](const Node<Q, O>& x) -> Partial<N> {
              if (const Q* q = asked(x)) return ret(N(ExtAsk<Unit, Q>{s, *q}));
              return ret(N(Out<O>{*output(x)}));
            });
          },
          star};
}

namespace detail {

// The plain tree at the first k answers of ans: replays the state
// from the start over every answer prefix.
template <class S, class I, class Q, class A, class O>
Partial<Node<Q, O>> replay(std::shared_ptr<const ExtTree<S, I, Q, A, O>> tau, I i,
                           std::shared_ptr<const std::vector<A>> ans, S s, std::size_t k) {
  std::vector<A> prefix(ans->begin(), ans->begin() + static_cast<std::ptrdiff_t>(k));
  auto here = tau->apply(i, s, prefix);
  if (k == ans->size()) {
    return here.bind([](const ExtNode<S, Q, O>& x) -> Partial<Node<Q, O>> {
      if (const auto* a = std::get_if<ExtAsk<S, Q>>(&x)) return ask<Q, O>(a->q);
      return out<Q, O>(std::get<Out<O>>(x).o);
    });
  }
  return here.bind([tau, i, ans, k](const ExtNode<S, Q, O>& x) -> Partial<Node<Q, O>> {
    if (const auto* a = std::get_if<ExtAsk<S, Q>>(&x)) {
      return replay<S, I, Q, A, O>(tau, i, ans, a->state, k + 1);
    }
    return out<Q, O>(std::get<Out<O>>(x).o);
  });
}

}  // namespace detail

template <class S, class I, class Q, class A, class O>
Tree<I, Q, A, O> ext_to_plain(ExtTree<S, I, Q, A, O> tau) {
  auto shared = std::make_shared<const ExtTree<S, I, Q, A, O>>(std::move(tau));
  return Tree<I, Q, A, O>([shared](const I& i, const std::vector<A>& ans) {
    return detail::replay<S, I, Q, A, O>(
        shared, i, std::make_shared<const std::vector<A>>(ans), shared->start, 0);
  });
}

template <class S, class I, class Q, class A, class O>
StallTree<S, I, Q, A, O> ext_to_stall(ExtTree<S, I, Q, A, O> tau) {
  using N = StallNode<S, Q, O>;
  return {[f = std::move(tau.apply)](const I& i, const S& s, const std::vector<A>& ans) {
            return f(i, s, ans).bind([](const ExtNode<S, Q, O>& x) -> Partial<N> {
              if (const auto* a = std::get_if<ExtAsk<S, Q>>(&x)) {
                return ret(N(StallStep<S, Q>{a->state, a->q}));
              }
              return ret(N(std::get<Out<O>>(x)));
            });
          },
          std::move(tau.start)};
}

namespace detail {

// The state reached after k stalls from s (or the first non-stall node, if
// it comes earlier).
template <class S, class I, class Q, class A, class O>
Partial<StallNode<S, Q, O>> stall_trace(
    std::shared_ptr<const typename StallTree<S, I, Q, A, O>::Fn> f, const I& i, const S& s,
    std::shared_ptr<const std::vector<A>> ans, Nat k) {
  Partial<StallNode<S, Q, O>> cur = (*f)(i, s, *ans);
  for (Nat step = 0; step < k; ++step) {
    cur = cur.bind([f, i, ans](const StallNode<S, Q, O>& x) -> Partial<StallNode<S, Q, O>> {
      const auto* st = std::get_if<StallStep<S, Q>>(&x);
      if (st && !st->q) return (*f)(i, st->state, *ans);
      return ret(StallNode<S, Q, O>(x));
    });
  }
  return cur;
}

template <class S, class Q, class O>
bool is_stall(const StallNode<S, Q, O>& x) {
  const auto* st = std::get_if<StallStep<S, Q>>(&x);
  return st && !st->q;
}

}  // namespace detail

// Stall elimination: μ-search the number of stalls after which the tree
// asks or outputs.
template <class S, class I, class Q, class A, class O>
ExtTree<S, I, Q, A, O> stall_to_ext(StallTree<S, I, Q, A, O> tau) {
  using N = ExtNode<S, Q, O>;
  using SN = StallNode<S, Q, O>;
  auto f = std::make_shared<const typename StallTree<S, I, Q, A, O>::Fn>(std::move(tau.apply));
  return {[f](const I& i, const S& s, const std::vector<A>& ans) -> Partial<N> {
            auto shared_ans = std::make_shared<const std::vector<A>>(ans);
            auto trace = [f, i, s, shared_ans](Nat k) {
              return detail::stall_trace<S, I, Q, A, O>(f, i, s, shared_ans, k);
            };
            return mu([trace](Nat k) {
                     return trace(k).bind(
                         [](const SN& x) { return ret(!detail::is_stall<S, Q, O>(x)); });
                   })
                .bind([trace](const Nat& k) {
                  return trace(k).bind([](const SN& x) -> Partial<N> {
                    if (const auto* st = std::get_if<StallStep<S, Q>>(&x)) {
                      return ret(N(ExtAsk<S, Q>{st->state, *st->q}));
                    }
                    return ret(N(std::get<Out<O>>(x)));
                  });
                });
          },
          std::move(tau.start)};
}

template <class S, class I, class Q, class A, class O>
Tree<I, Q, A, O> stall_to_plain(StallTree<S, I, Q, A, O> tau) {
  return ext_to_plain(stall_to_ext(std::move(tau)));
}

// ---------------------------------------------------------------------------
// Basic combinators

// The tree at i behaves as tau at g(i). Usage: precompose<I>(g, tau).
template <class I, class G, class I2, class Q, class A, class O>
Tree<I, Q, A, O> precompose(G g, Tree<I2, Q, A, O> tau) {
  return Tree<I, Q, A, O>(
      [g = std::move(g), tau = std::move(tau)](const I& i, const std::vector<A>& ans) {
        return tau(g(i), ans);
      });
}

// Never asks; outputs whatever f converges to.
template <class I, class Q, class A, class O>
Tree<I, Q, A, O> of_partial_fn(std::function<Partial<O>(const I&)> f) {
  return Tree<I, Q, A, O>([f = std::move(f)](const I& i, const std::vector<A>&) {
    return f(i).bind([](const O& o) { return out<Q, O>(o); });
  });
}

template <class I, class Q, class A, class O>
Tree<I, Q, A, O> of_total(std::function<O(const I&)> f) {
  return of_partial_fn<I, Q, A, O>(
      [f = std::move(f)](const I& i) { return ret(O(f(i))); });
}

template <class I, class Q, class A, class O>
Tree<I, Q, A, O> constant(O v) {
  return of_total<I, Q, A, O>([v = std::move(v)](const I&) { return v; });
}

template <class I, class Q, class A, class O>
Tree<I, Q, A, O> nowhere() {
  return of_partial_fn<I, Q, A, O>([](const I&) { return undef<O>(); });
}

// Asks the input, outputs the first answer.
template <class Q, class A>
Tree<Q, Q, A, A> ident() {
  return Tree<Q, Q, A, A>([](const Q& q, const std::vector<A>& ans) {
    if (ans.empty()) return ask<Q, A>(q);
    return out<Q, A>(A(ans.front()));
  });
}

template <class Test, class I, class Q, class A, class O>
Tree<I, Q, A, O> ite(Test test, Tree<I, Q, A, O> then_tree,
                     Tree<I, Q, A, O> else_tree) {
  return Tree<I, Q, A, O>([test = std::move(test), t = std::move(then_tree),
                           e = std::move(else_tree)](const I& i, const std::vector<A>& ans) {
    return test(i) ? t(i, ans) : e(i, ans);
  });
}

// ---------------------------------------------------------------------------
// Sequencing, composition, search

// State: empty while the first tree runs, then its output together with the
// number of answers it consumed.
template <class O1>
using BindState = std::optional<std::pair<O1, Nat>>;

template <class I, class Q, class A, class O1, class O>
StallTree<BindState<O1>, I, Q, A, O> seq_bind_stalling(Tree<I, Q, A, O1> first,
                                                       Tree<std::pair<I, O1>, Q, A, O> second) {
  using S = BindState<O1>;
  using N = StallNode<S, Q, O>;
  return {[first = std::move(first), second = std::move(second)](
              const I& i, const S& s, const std::vector<A>& ans) -> Partial<N> {
            if (!s) {
              const Nat consumed = ans.size();
              return first(i, ans).bind([consumed](const Node<Q, O1>& x) -> Partial<N> {
                if (const Q* q = asked(x)) return stall_ask<S, Q, O>(S{}, *q);
                return stall<S, Q, O>(S{std::pair<O1, Nat>{*output(x), consumed}});
              });
            }
            const auto& [o1, n] = *s;
            std::vector<A> rest;
            if (ans.size() > n) {
              rest.assign(ans.begin() + static_cast<std::ptrdiff_t>(n), ans.end());
            }
            return second(std::pair<I, O1>{i, o1}, rest).bind(
                [s](const Node<Q, O>& x) -> Partial<N> {
                  if (const Q* q = asked(x)) return stall_ask<S, Q, O>(s, *q);
                  return stall_out<S, Q, O>(*output(x));
                });
          },
          S{}};
}

template <class I, class Q, class A, class O1, class O>
Tree<I, Q, A, O> seq_bind(Tree<I, Q, A, O1> first, Tree<std::pair<I, O1>, Q, A, O> second) {
  return stall_to_plain(seq_bind_stalling(std::move(first), std::move(second)));
}

// State of the composition tree: answered questions of the outer tree, and
// the inner run in progress (its question plus how many of the most recent
// oracle answers belong to it).
template <class X, class Y>
struct CompState {
  std::vector<std::pair<X, Y>> answered;
  std::optional<std::pair<X, Nat>> running;
};

// outer : I → X-questions, Y-answers; inner : X → Q-questions, A-answers.
// Every question of outer is answered by running inner against the oracle.
template <class X, class Q, class A, class Y, class I, class O>
StallTree<CompState<X, Y>, I, Q, A, O> compose_stalling(Tree<X, Q, A, Y> inner,
                                                        Tree<I, X, Y, O> outer) {
  using S = CompState<X, Y>;
  using N = StallNode<S, Q, O>;
  return {[inner = std::move(inner), outer = std::move(outer)](
              const I& i, const S& s, const std::vector<A>& ans) -> Partial<N> {
            if (!s.running) {
              std::vector<Y> outer_ans;
              outer_ans.reserve(s.answered.size());
              for (const auto& [x, y] : s.answered) outer_ans.push_back(y);
              return outer(i, outer_ans).bind([s](const Node<X, O>& node) -> Partial<N> {
                if (const X* x = asked(node)) {
                  S next = s;
                  next.running = std::pair<X, Nat>{*x, 0};
                  return stall<S, Q, O>(std::move(next));
                }
                return stall_out<S, Q, O>(*output(node));
              });
            }
            const auto& [x, n] = *s.running;
            std::vector<A> last;
            if (n <= ans.size()) {
              last.assign(ans.end() - static_cast<std::ptrdiff_t>(n), ans.end());
            } else {
              last = ans;
            }
            return inner(x, last).bind([s](const Node<Q, Y>& node) -> Partial<N> {
              S next = s;
              if (const Q* q = asked(node)) {
                next.running->second += 1;
                return stall_ask<S, Q, O>(std::move(next), *q);
              }
              next.answered.emplace_back(next.running->first, *output(node));
              next.running.reset();
              return stall<S, Q, O>(std::move(next));
            });
          },
          S{}};
}

template <class X, class Q, class A, class Y, class I, class O>
Tree<I, Q, A, O> compose_trees(Tree<X, Q, A, Y> inner, Tree<I, X, Y, O> outer) {
  return stall_to_plain(compose_stalling(std::move(inner), std::move(outer)));
}

// Asks (i,0), (i,1), … and outputs the least index answered true.
template <class I>
Tree<I, std::pair<I, Nat>, bool, Nat> search() {
  using Q = std::pair<I, Nat>;
  return Tree<I, Q, bool, Nat>([](const I& i, const std::vector<bool>& ans) {
    for (std::size_t j = 0; j < ans.size(); ++j) {
      if (ans[j]) return out<Q, Nat>(Nat{j});
    }
    return ask<Q, Nat>(Q{i, Nat{ans.size()}});
  });
}

}  // namespace oc
