#include "oraclecomp/checks/fixtures.hpp"

#include <functional>
#include <sstream>

namespace oc::checks {

namespace {

Nat uniform(Rng& rng, Nat lo, Nat hi) {
  return std::uniform_int_distribution<Nat>(lo, hi)(rng);
}

FiniteNode random_leaf(Rng& rng, const TreeShape& shape) {
  FiniteNode n;
  n.cost = uniform(rng, 0, shape.max_cost);
  if (uniform(rng, 0, 4) == 0) {
    n.kind = FiniteNode::Kind::diverge;
  } else {
    n.kind = FiniteNode::Kind::out;
    n.value = uniform(rng, 0, shape.outputs - 1);
  }
  return n;
}

FiniteNode random_node(Rng& rng, const TreeShape& shape, std::size_t depth) {
  if (depth >= shape.max_depth || uniform(rng, 0, 9) < 4) return random_leaf(rng, shape);
  FiniteNode n;
  n.kind = FiniteNode::Kind::ask;
  n.value = uniform(rng, 0, shape.questions - 1);
  n.cost = uniform(rng, 0, shape.max_cost);
  return n;
}

std::string path_string(const Path& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k];
  os << ']';
  return os.str();
}

}  // namespace

std::string FiniteNode::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ask: os << "ask " << value; break;
    case Kind::out: os << "out " << value; break;
    case Kind::diverge: os << "undef"; break;
  }
  if (cost) os << " @" << cost;
  return os.str();
}

const FiniteNode* FiniteTree::find(const Path& p) const {
  auto it = nodes.find(p);
  return it == nodes.end() ? nullptr : &it->second;
}

std::string FiniteTree::describe() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [p, n] : nodes) {
    os << (first ? "" : "; ") << path_string(p) << ": " << n.describe();
    first = false;
  }
  os << '}';
  return os.str();
}

FiniteTree random_tree(Rng& rng, const TreeShape& shape) {
  FiniteTree t;
  std::function<void(const Path&)> grow = [&](const Path& p) {
    FiniteNode n = random_node(rng, shape, p.size());
    t.nodes[p] = n;
    if (n.kind != FiniteNode::Kind::ask) return;
    for (Nat a = 0; a < shape.answers; ++a) {
      Path child = p;
      child.push_back(a);
      grow(child);
    }
  };
  grow({});
  return t;
}

Family random_family(Rng& rng, const TreeShape& shape, std::size_t inputs) {
  Family f;
  f.reserve(inputs);
  for (std::size_t i = 0; i < inputs; ++i) f.push_back(random_tree(rng, shape));
  return f;
}

Partial<Node<Nat, Nat>> engine_node(const FiniteNode* node) {
  if (!node) return undef<Node<Nat, Nat>>();
  switch (node->kind) {
    case FiniteNode::Kind::ask:
      return delayed(Node<Nat, Nat>(Ask<Nat>{node->value}), node->cost);
    case FiniteNode::Kind::out:
      return delayed(Node<Nat, Nat>(Out<Nat>{node->value}), node->cost);
    case FiniteNode::Kind::diverge:
      break;
  }
  return undef<Node<Nat, Nat>>();
}

FixedTree<Nat, Nat, Nat> engine_fixed(std::shared_ptr<const FiniteTree> tree) {
  return FixedTree<Nat, Nat, Nat>(
      [tree](const std::vector<Nat>& ans) { return engine_node(tree->find(ans)); });
}

Tree<Nat, Nat, Nat, Nat> engine_tree(std::shared_ptr<const Family> family) {
  return Tree<Nat, Nat, Nat, Nat>([family](const Nat& i, const std::vector<Nat>& ans) {
    if (i >= family->size()) return undef<Node<Nat, Nat>>();
    return engine_node((*family)[i].find(ans));
  });
}

std::set<Nat> reference_outputs(const FiniteTree& tree, const Relation& rel,
                                std::size_t max_len) {
  std::set<Nat> outs;
  std::vector<Path> frontier{Path{}};
  while (!frontier.empty()) {
    Path ans = std::move(frontier.back());
    frontier.pop_back();
    const FiniteNode* n = tree.find(ans);
    if (!n) continue;
    if (n->kind == FiniteNode::Kind::out) {
      outs.insert(n->value);
    } else if (n->kind == FiniteNode::Kind::ask && ans.size() < max_len) {
      auto it = rel.find(n->value);
      if (it == rel.end()) continue;
      for (Nat a : it->second) {
        Path next = ans;
        next.push_back(a);
        frontier.push_back(std::move(next));
      }
    }
  }
  return outs;
}

std::vector<std::vector<std::optional<Nat>>> all_partial_functions(Nat q, Nat a) {
  std::vector<std::vector<std::optional<Nat>>> all{{}};
  for (Nat k = 0; k < q; ++k) {
    std::vector<std::vector<std::optional<Nat>>> next;
    for (const auto& f : all) {
      for (Nat v = 0; v <= a; ++v) {
        auto g = f;
        g.push_back(v == a ? std::nullopt : std::optional<Nat>(v));
        next.push_back(std::move(g));
      }
    }
    all = std::move(next);
  }
  return all;
}

std::vector<std::vector<std::optional<Nat>>> all_total_functions(Nat q, Nat a) {
  std::vector<std::vector<std::optional<Nat>>> total;
  for (auto& f : all_partial_functions(q, a)) {
    bool defined = true;
    for (const auto& v : f) defined = defined && v.has_value();
    if (defined) total.push_back(std::move(f));
  }
  return total;
}

Relation to_relation(const std::vector<std::optional<Nat>>& fn) {
  Relation r;
  for (Nat q = 0; q < fn.size(); ++q) {
    if (fn[q]) r[q] = {*fn[q]};
  }
  return r;
}

TableOracle<Nat, Nat> to_table(const std::vector<std::optional<Nat>>& fn) {
  TableOracle<Nat, Nat> t;
  for (Nat q = 0; q < fn.size(); ++q) {
    if (fn[q]) t.entries.push_back({q, {*fn[q]}});
  }
  return t;
}

FnOracle<Nat, Nat> to_fn_oracle(const std::vector<std::optional<Nat>>& fn) {
  return FnOracle<Nat, Nat>{[fn](const Nat& q) -> Partial<Nat> {
    if (q >= fn.size() || !fn[q]) return undef<Nat>();
    return ret(Nat{*fn[q]});
  }};
}

std::string describe(const std::vector<std::optional<Nat>>& fn) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Nat q = 0; q < fn.size(); ++q) {
    if (!fn[q]) continue;
    os << (first ? "" : ",") << q << "->" << *fn[q];
    first = false;
  }
  os << '}';
  return os.str();
}

std::string FiniteStallTree::describe() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [p, n] : nodes) {
    os << (first ? "" : "; ") << path_string(p) << ": ";
    if (!n.increments.empty()) os << "stall" << path_string(n.increments) << " ";
    os << n.final.describe();
    first = false;
  }
  os << '}';
  return os.str();
}

FiniteStallTree random_stall_tree(Rng& rng, const TreeShape& shape, std::size_t max_stalls) {
  FiniteStallTree t;
  t.outputs = shape.outputs;
  std::function<void(const Path&)> grow = [&](const Path& p) {
    FiniteStallNode n;
    const Nat stalls = uniform(rng, 0, max_stalls);
    for (Nat k = 0; k < stalls; ++k) n.increments.push_back(uniform(rng, 0, shape.outputs - 1));
    n.final = random_node(rng, shape, p.size());
    t.nodes[p] = n;
    if (n.final.kind != FiniteNode::Kind::ask) return;
    for (Nat a = 0; a < shape.answers; ++a) {
      Path child = p;
      child.push_back(a);
      grow(child);
    }
  };
  grow({});
  return t;
}

StallTree<StallState, Nat, Nat, Nat, Nat> engine_stall_tree(
    std::shared_ptr<const FiniteStallTree> tree) {
  using N = StallNode<StallState, Nat, Nat>;
  return {[tree](const Nat&, const StallState& s, const std::vector<Nat>& ans) -> Partial<N> {
            auto it = tree->nodes.find(ans);
            if (it == tree->nodes.end()) return undef<N>();
            const FiniteStallNode& node = it->second;
            const auto [done, acc] = s;
            if (done < node.increments.size()) {
              return stall<StallState, Nat, Nat>({done + 1, acc + node.increments[done]});
            }
            const FiniteNode& f = node.final;
            switch (f.kind) {
              case FiniteNode::Kind::ask:
                return delayed(N(StallStep<StallState, Nat>{{0, acc}, f.value}), f.cost);
              case FiniteNode::Kind::out:
                return delayed(N(Out<Nat>{(f.value + acc) % tree->outputs}), f.cost);
              case FiniteNode::Kind::diverge:
                break;
            }
            return undef<N>();
          },
          StallState{0, 0}};
}

std::set<Nat> reference_stall_outputs(const FiniteStallTree& tree, const Relation& rel,
                                      std::size_t max_len) {
  std::set<Nat> outs;
  std::function<void(const Path&, Nat)> walk = [&](const Path& ans, Nat acc) {
    auto it = tree.nodes.find(ans);
    if (it == tree.nodes.end()) return;
    const FiniteStallNode& node = it->second;
    for (Nat inc : node.increments) acc += inc;
    const FiniteNode& f = node.final;
    if (f.kind == FiniteNode::Kind::out) {
      outs.insert((f.value + acc) % tree.outputs);
    } else if (f.kind == FiniteNode::Kind::ask && ans.size() < max_len) {
      auto r = rel.find(f.value);
      if (r == rel.end()) return;
      for (Nat a : r->second) {
        Path next = ans;
        next.push_back(a);
        walk(next, acc);
      }
    }
  };
  walk({}, 0);
  return outs;
}

}  // namespace oc::checks
