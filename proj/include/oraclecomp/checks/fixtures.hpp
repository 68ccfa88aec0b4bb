#pragma once

// Explicit finite trees for property checks, their engine adapters, and
// brute-force reference evaluators that work on the data directly.

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oraclecomp/combinators.hpp"
#include "oraclecomp/tree.hpp"

namespace oc::checks {

using Rng = std::mt19937_64;
using Path = std::vector<Nat>;

// A relation Q → A as answer lists; functional iff every list has ≤ 1 entry.
using Relation = std::map<Nat, std::vector<Nat>>;

struct FiniteNode {
  enum class Kind { ask, out, diverge };
  Kind kind = Kind::diverge;
  Nat value = 0;  // question or output
  Fuel cost = 0;  // fuel needed to reach the node

  std::string describe() const;
};

// Node table indexed by answer path. Paths missing from the table diverge.
struct FiniteTree {
  std::map<Path, FiniteNode> nodes;

  const FiniteNode* find(const Path& p) const;
  std::string describe() const;
};

// One finite tree per input 0..n-1.
using Family = std::vector<FiniteTree>;

struct TreeShape {
  Nat questions = 4;  // questions drawn from 0..questions-1
  Nat answers = 4;    // answer alphabet 0..answers-1
  Nat outputs = 4;
  std::size_t max_depth = 4;
  Fuel max_cost = 2;
};

FiniteTree random_tree(Rng& rng, const TreeShape& shape);
Family random_family(Rng& rng, const TreeShape& shape, std::size_t inputs);

// A partial value converging to v at exactly `cost` fuel.
template <class T>
Partial<T> delayed(T v, Fuel cost) {
  if (cost == 0) return ret(std::move(v));
  return mu([cost](Nat n) { return ret(n + 1 >= cost); }).map([v](const Nat&) { return v; });
}

Partial<Node<Nat, Nat>> engine_node(const FiniteNode* node);
FixedTree<Nat, Nat, Nat> engine_fixed(std::shared_ptr<const FiniteTree> tree);
Tree<Nat, Nat, Nat, Nat> engine_tree(std::shared_ptr<const Family> family);

// Outputs of every interrogation against `rel`, walking the table directly.
std::set<Nat> reference_outputs(const FiniteTree& tree, const Relation& rel,
                                std::size_t max_len);

// Every partial function {0..q-1} → {0..a-1}, as answer options per question.
std::vector<std::vector<std::optional<Nat>>> all_partial_functions(Nat q, Nat a);
std::vector<std::vector<std::optional<Nat>>> all_total_functions(Nat q, Nat a);

Relation to_relation(const std::vector<std::optional<Nat>>& fn);
TableOracle<Nat, Nat> to_table(const std::vector<std::optional<Nat>>& fn);
FnOracle<Nat, Nat> to_fn_oracle(const std::vector<std::optional<Nat>>& fn);
std::string describe(const std::vector<std::optional<Nat>>& fn);

template <class T>
std::set<T> to_set(const std::vector<T>& v) {
  return std::set<T>(v.begin(), v.end());
}

// ---------------------------------------------------------------------------
// Stalling trees. State is (stalls done at the current node, accumulator);
// each stall adds its increment to the accumulator and outputs are shifted
// by it, so the result depends on the whole stall history.

struct FiniteStallNode {
  std::vector<Nat> increments;  // one per stall before `final`
  FiniteNode final;
};

struct FiniteStallTree {
  std::map<Path, FiniteStallNode> nodes;
  Nat outputs = 4;

  std::string describe() const;
};

using StallState = std::pair<Nat, Nat>;

FiniteStallTree random_stall_tree(Rng& rng, const TreeShape& shape, std::size_t max_stalls);
StallTree<StallState, Nat, Nat, Nat, Nat> engine_stall_tree(
    std::shared_ptr<const FiniteStallTree> tree);
std::set<Nat> reference_stall_outputs(const FiniteStallTree& tree, const Relation& rel,
                                      std::size_t max_len);

}  // namespace oc::checks
