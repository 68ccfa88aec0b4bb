#pragma once

// Computation trees, oracles, transcripts and the interrogation relation.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "oraclecomp/partial.hpp"

namespace oc {

template <class Q>
struct Ask {
  Q q;
  friend bool operator==(const Ask&, const Ask&) = default;
};

template <class O>
struct Out {
  O o;
  friend bool operator==(const Out&, const Out&) = default;
};

template <class Q, class O>
using Node = std::variant<Ask<Q>, Out<O>>;

template <class Q, class O>
Partial<Node<Q, O>> ask(Q q) {
  return ret(Node<Q, O>(Ask<Q>{std::move(q)}));
}

template <class Q, class O>
Partial<Node<Q, O>> out(O o) {
  return ret(Node<Q, O>(Out<O>{std::move(o)}));
}

template <class Q, class O>
const Q* asked(const Node<Q, O>& n) {
  auto* a = std::get_if<Ask<Q>>(&n);
  return a ? &a->q : nullptr;
}

template <class Q, class O>
const O* output(const Node<Q, O>& n) {
  auto* o = std::get_if<Out<O>>(&n);
  return o ? &o->o : nullptr;
}

// A tree at a fixed input: answer history ⇀ Ask | Out.
template <class Q, class A, class O>
class FixedTree {
 public:
  using Answers = std::vector<A>;
  using Fn = std::function<Partial<Node<Q, O>>(const Answers&)>;

  FixedTree() = default;
  template <class F>
    requires std::is_invocable_r_v<Partial<Node<Q, O>>, F, const Answers&>
  FixedTree(F f) : fn_(std::make_shared<const Fn>(std::move(f))) {}

  Partial<Node<Q, O>> operator()(const Answers& ans) const {
    if (!fn_) return undef<Node<Q, O>>();
    return (*fn_)(ans);
  }

 private:
  std::shared_ptr<const Fn> fn_;
};

// A tree over all inputs: input → answers ⇀ question | output
template <class I, class Q, class A, class O>
class Tree {
 public:
  using Input = I;
  using Question = Q;
  using Answer = A;
  using Output = O;
  using Answers = std::vector<A>;
  using Fn = std::function<Partial<Node<Q, O>>(const I&, const Answers&)>;

  Tree() = default;
  template <class F>
    requires std::is_invocable_r_v<Partial<Node<Q, O>>, F, const I&, const Answers&>
  Tree(F f) : fn_(std::make_shared<const Fn>(std::move(f))) {}

  Partial<Node<Q, O>> operator()(const I& i, const Answers& ans) const {
    if (!fn_) return undef<Node<Q, O>>();
    return (*fn_)(i, ans);
  }

  FixedTree<Q, A, O> at(I i) const {
    return FixedTree<Q, A, O>(
        [fn = fn_, i = std::move(i)](const Answers& ans) -> Partial<Node<Q, O>> {
          if (!fn) return undef<Node<Q, O>>();
          return (*fn)(i, ans);
        });
  }

 private:
  std::shared_ptr<const Fn> fn_;
};

// The subtree reached after the given answers.
template <class Q, class A, class O>
FixedTree<Q, A, O> subtree_at(FixedTree<Q, A, O> sigma, std::vector<A> prefix) {
  if (prefix.empty()) return sigma;
  return FixedTree<Q, A, O>(
      [sigma = std::move(sigma), prefix = std::move(prefix)](const std::vector<A>& rest) {
        std::vector<A> full = prefix;
        full.insert(full.end(), rest.begin(), rest.end());
        return sigma(full);
      });
}

// The example tree asking every q < i and answering true when all
// answers are true.
inline Tree<Nat, Nat, bool, bool> threshold_tree() {
  return Tree<Nat, Nat, bool, bool>(
      [](const Nat& i, const std::vector<bool>& ans) -> Partial<Node<Nat, bool>> {
        if (std::find(ans.begin(), ans.end(), false) != ans.end()) {
          return undef<Node<Nat, bool>>();
        }
        if (ans.size() < i) return ask<Nat, bool>(Nat{ans.size()});
        return out<Nat, bool>(true);
      });
}

template <class Q, class A>
struct Transcript {
  std::vector<Q> qs;
  std::vector<A> ans;

  std::size_t size() const { return qs.size(); }
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

template <class Q, class A>
Transcript<Q, A> concat(const Transcript<Q, A>& a, const Transcript<Q, A>& b) {
  Transcript<Q, A> t = a;
  t.qs.insert(t.qs.end(), b.qs.begin(), b.qs.end());
  t.ans.insert(t.ans.end(), b.ans.begin(), b.ans.end());
  return t;
}

template <class Q, class A>
struct FnOracle {
  std::function<Partial<A>(const Q&)> answer;

  Partial<A> operator()(const Q& q) const {
    if (!answer) return undef<A>();
    return answer(q);
  }
};

// A finite relational oracle. Several answers per question model
// non-functional relations.
template <class Q, class A>
struct TableOracle {
  std::vector<std::pair<Q, std::vector<A>>> entries;

  const std::vector<A>* answers_for(const Q& q) const {
    for (const auto& [key, as] : entries) {
      if (key == q) return &as;
    }
    return nullptr;
  }

  bool functional() const {
    for (const auto& [key, as] : entries) {
      if (as.size() > 1) return false;
    }
    return true;
  }
};

template <class Q, class A>
using Oracle = std::variant<FnOracle<Q, A>, TableOracle<Q, A>>;

// Functional table as a partial function; unlisted questions diverge.
template <class Q, class A>
FnOracle<Q, A> as_function(const TableOracle<Q, A>& table) {
  if (!table.functional()) {
    throw std::invalid_argument("table oracle is not functional");
  }
  auto shared = std::make_shared<const TableOracle<Q, A>>(table);
  return FnOracle<Q, A>{[shared](const Q& q) -> Partial<A> {
    const auto* as = shared->answers_for(q);
    if (!as || as->empty()) return undef<A>();
    return ret(A(as->front()));
  }};
}

template <class Q, class A>
FnOracle<Q, A> total_oracle(std::function<A(const Q&)> f) {
  return FnOracle<Q, A>{[f = std::move(f)](const Q& q) { return ret(A(f(q))); }};
}

enum class Verdict { valid, invalid, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::valid: return "valid";
    case Verdict::invalid: return "invalid";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

namespace detail {

template <class Q, class A>
Verdict relates(const Oracle<Q, A>& oracle, const Q& q, const A& a, Fuel step_fuel) {
  if (const auto* f = std::get_if<FnOracle<Q, A>>(&oracle)) {
    auto got = (*f)(q).eval(step_fuel);
    if (!got) return Verdict::unknown;
    return *got == a ? Verdict::valid : Verdict::invalid;
  }
  const auto& table = std::get<TableOracle<Q, A>>(oracle);
  const auto* as = table.answers_for(q);
  if (!as) return Verdict::invalid;
  return std::find(as->begin(), as->end(), a) != as->end() ? Verdict::valid
                                                           : Verdict::invalid;
}

}  // namespace detail

// Whether the tree asks qs and the oracle gives ans, up to step_fuel per node.
template <class Q, class A, class O>
Verdict check_transcript(const FixedTree<Q, A, O>& sigma, const Oracle<Q, A>& oracle,
                         const Transcript<Q, A>& t, Fuel step_fuel) {
  if (t.qs.size() != t.ans.size()) {
    throw std::invalid_argument("transcript lists differ in length");
  }
  bool unknown = false;
  std::vector<A> prefix;
  prefix.reserve(t.ans.size());
  for (std::size_t k = 0; k < t.qs.size(); ++k) {
    auto node = sigma(prefix).eval(step_fuel);
    if (!node) {
      unknown = true;
    } else {
      const Q* q = asked(*node);
      if (!q || !(*q == t.qs[k])) return Verdict::invalid;
      switch (detail::relates(oracle, t.qs[k], t.ans[k], step_fuel)) {
        case Verdict::invalid: return Verdict::invalid;
        case Verdict::unknown: unknown = true; break;
        case Verdict::valid: break;
      }
    }
    prefix.push_back(t.ans[k]);
  }
  return unknown ? Verdict::unknown : Verdict::valid;
}

template <class Q, class A, class O>
struct EnumeratedRun {
  Transcript<Q, A> transcript;
  std::optional<O> out;
};

template <class Q, class A, class O>
struct Enumeration {
  std::vector<EnumeratedRun<Q, A, O>> runs;
  // Some node did not converge within step_fuel; more transcripts may exist.
  bool fuel_limited = false;
  // Some transcript of length max_len could have been extended.
  bool length_limited = false;

  std::vector<O> outputs() const {
    std::vector<O> os;
    for (const auto& r : runs) {
      if (r.out) os.push_back(*r.out);
    }
    return os;
  }
};

// Every valid transcript of length ≤ max_len against a finite table, in
// depth-first order (answers in table order).
template <class Q, class A, class O>
Enumeration<Q, A, O> enumerate_transcripts(const FixedTree<Q, A, O>& sigma,
                                           const TableOracle<Q, A>& oracle,
                                           std::size_t max_len, Fuel step_fuel) {
  Enumeration<Q, A, O> result;
  Transcript<Q, A> t;
  std::function<void()> walk = [&]() {
    auto node = sigma(t.ans).eval(step_fuel);
    if (!node) {
      result.fuel_limited = true;
      result.runs.push_back({t, std::nullopt});
      return;
    }
    if (const O* o = output(*node)) {
      result.runs.push_back({t, *o});
      return;
    }
    result.runs.push_back({t, std::nullopt});
    const Q& q = *asked(*node);
    const auto* as = oracle.answers_for(q);
    if (!as || as->empty()) return;
    if (t.size() >= max_len) {
      result.length_limited = true;
      return;
    }
    for (const A& a : *as) {
      t.qs.push_back(q);
      t.ans.push_back(a);
      walk();
      t.qs.pop_back();
      t.ans.pop_back();
    }
  };
  walk();
  return result;
}

}  // namespace oc
