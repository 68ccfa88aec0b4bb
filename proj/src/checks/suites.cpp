#include "oraclecomp/checks/suites.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "oraclecomp/checks/fixtures.hpp"
#include "oraclecomp/combinators.hpp"
#include "oraclecomp/evaluator.hpp"
#include "oraclecomp/post.hpp"
#include "oraclecomp/reducibility.hpp"
#include "oraclecomp/truthtable.hpp"

namespace oc::checks {

namespace {

Nat uniform(Rng& rng, Nat lo, Nat hi) {
  return std::uniform_int_distribution<Nat>(lo, hi)(rng);
}

// Records a failure, keeping the smallest counterexample seen.
class FailureLog {
 public:
  explicit FailureLog(SuiteResult& r) : r_(r) {}

  void check(bool ok, std::size_t size, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (ok) return;
    r_.passed = false;
    if (size < best_size_) {
      best_size_ = size;
      r_.counterexample = describe();
    }
  }

 private:
  SuiteResult& r_;
  std::size_t best_size_ = SIZE_MAX;
};

std::string set_string(const std::set<Nat>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Nat v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

template <class T>
bool is_prefix(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Shared corpus for the interrogation criteria.
constexpr TreeShape kInterrogationShape{4, 4, 4, 4, 2};
constexpr Fuel kInterrogationFuel = 8;
constexpr std::size_t kInterrogationLen = 4;

std::vector<FiniteTree> interrogation_corpus(const SuiteOptions& opts) {
  Rng rng(opts.seed);
  std::vector<FiniteTree> corpus;
  corpus.reserve(opts.cases);
  for (std::size_t c = 0; c < opts.cases; ++c) {
    corpus.push_back(random_tree(rng, kInterrogationShape));
  }
  return corpus;
}

struct OracleCase {
  std::vector<std::optional<Nat>> fn;
  TableOracle<Nat, Nat> table;
  FnOracle<Nat, Nat> partial_fn;
  Relation relation;
};

std::vector<OracleCase> oracle_cases(Nat q, Nat a) {
  std::vector<OracleCase> cases;
  for (auto& fn : all_partial_functions(q, a)) {
    OracleCase c{fn, to_table(fn), to_fn_oracle(fn), to_relation(fn)};
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace

SuiteResult interrogation_equivalence(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "interrogation equivalence (delta vs enumerated transcripts)";
  FailureLog log(r);
  const auto oracles = oracle_cases(4, 4);
  for (const auto& tree : interrogation_corpus(opts)) {
    ++r.cases;
    auto sigma = engine_fixed(std::make_shared<const FiniteTree>(tree));
    for (const auto& o : oracles) {
      auto enumerated =
          to_set(enumerate_transcripts(sigma, o.table, kInterrogationLen, kInterrogationFuel)
                     .outputs());
      std::set<Nat> via_delta;
      for (Nat n = 0; n <= kInterrogationLen; ++n) {
        if (auto v = delta(sigma, o.partial_fn, Budget{n, kInterrogationFuel}).value()) {
          via_delta.insert(*v);
        }
      }
      auto reference = reference_outputs(tree, o.relation, kInterrogationLen);
      log.check(enumerated == via_delta && enumerated == reference, tree.nodes.size(), [&] {
        return "tree " + tree.describe() + " oracle " + describe(o.fn) + ": enumerated " +
               set_string(enumerated) + ", delta " + set_string(via_delta) + ", reference " +
               set_string(reference);
      });
    }
  }
  r.note = "question_fuel 0..4, step_fuel 8, 625 partial oracles over {0..3}";
  return r;
}

SuiteResult prefix_determinacy(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "prefix determinacy under functional oracles";
  FailureLog log(r);
  const auto oracles = oracle_cases(4, 4);
  for (const auto& tree : interrogation_corpus(opts)) {
    ++r.cases;
    auto sigma = engine_fixed(std::make_shared<const FiniteTree>(tree));
    for (const auto& o : oracles) {
      auto e = enumerate_transcripts(sigma, o.table, kInterrogationLen, kInterrogationFuel);
      for (const auto& a : e.runs) {
        for (const auto& b : e.runs) {
          if (a.transcript.size() > b.transcript.size()) continue;
          const bool ok = is_prefix(a.transcript.qs, b.transcript.qs) &&
                          is_prefix(a.transcript.ans, b.transcript.ans);
          log.check(ok, tree.nodes.size(), [&] {
            return "tree " + tree.describe() + " oracle " + describe(o.fn) +
                   ": transcripts not prefix-ordered";
          });
        }
      }
      log.check(to_set(e.outputs()).size() <= 1, tree.nodes.size(), [&] {
        return "tree " + tree.describe() + " oracle " + describe(o.fn) + ": several outputs";
      });
    }
  }
  return r;
}

SuiteResult concatenation_law(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "interrogation concatenation law";
  FailureLog log(r);
  const auto oracles = oracle_cases(4, 4);
  Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  auto valid = [](const FixedTree<Nat, Nat, Nat>& s, const Oracle<Nat, Nat>& o,
                  const Transcript<Nat, Nat>& t) {
    return check_transcript(s, o, t, kInterrogationFuel) == Verdict::valid;
  };
  auto split = [](const Transcript<Nat, Nat>& t, std::size_t k) {
    Transcript<Nat, Nat> head{{t.qs.begin(), t.qs.begin() + k}, {t.ans.begin(), t.ans.begin() + k}};
    Transcript<Nat, Nat> tail{{t.qs.begin() + k, t.qs.end()}, {t.ans.begin() + k, t.ans.end()}};
    return std::pair{head, tail};
  };
  for (const auto& tree : interrogation_corpus(opts)) {
    ++r.cases;
    auto sigma = engine_fixed(std::make_shared<const FiniteTree>(tree));
    for (const auto& o : oracles) {
      const Oracle<Nat, Nat> oracle = o.table;
      auto e = enumerate_transcripts(sigma, o.table, kInterrogationLen, kInterrogationFuel);
      auto fail = [&](const Transcript<Nat, Nat>& a, const Transcript<Nat, Nat>& b) {
        return [&, a, b] {
          std::ostringstream os;
          os << "tree " << tree.describe() << " oracle " << describe(o.fn) << " split |t1|="
             << a.size() << " |t2|=" << b.size();
          return os.str();
        };
      };
      for (const auto& run : e.runs) {
        // concatenated valid ⇒ both halves valid
        for (std::size_t k = 0; k <= run.transcript.size(); ++k) {
          auto [head, tail] = split(run.transcript, k);
          const bool ok = valid(sigma, oracle, run.transcript) && valid(sigma, oracle, head) &&
                          valid(subtree_at(sigma, head.ans), oracle, tail);
          log.check(ok, tree.nodes.size(), fail(head, tail));
        }
        // both halves valid ⇒ concatenation valid
        auto sub = subtree_at(sigma, run.transcript.ans);
        auto rest = enumerate_transcripts(sub, o.table, kInterrogationLen - run.transcript.size(),
                                          kInterrogationFuel);
        for (const auto& tail : rest.runs) {
          log.check(valid(sigma, oracle, concat(run.transcript, tail.transcript)),
                    tree.nodes.size(), fail(run.transcript, tail.transcript));
        }
      }
    }
    // Arbitrary lists, valid or not: the equivalence in both directions.
    const auto& o = oracles[uniform(rng, 0, oracles.size() - 1)];
    const Oracle<Nat, Nat> oracle = o.table;
    for (int sample = 0; sample < 16; ++sample) {
      const std::size_t len = uniform(rng, 0, kInterrogationLen);
      Transcript<Nat, Nat> t;
      for (std::size_t k = 0; k < len; ++k) {
        t.qs.push_back(uniform(rng, 0, 3));
        t.ans.push_back(uniform(rng, 0, 3));
      }
      const std::size_t k = uniform(rng, 0, len);
      auto [head, tail] = split(t, k);
      const bool lhs = valid(sigma, oracle, head) && valid(subtree_at(sigma, head.ans), oracle, tail);
      log.check(lhs == valid(sigma, oracle, t), tree.nodes.size(), [&] {
        return "tree " + tree.describe() + " oracle " + describe(o.fn) + ": random split mismatch";
      });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Combinators against direct relational evaluation of their functionals.

namespace {

constexpr Nat kAlpha = 3;  // inputs, questions, answers and outputs in 0..2
constexpr TreeShape kCombinatorShape{kAlpha, kAlpha, kAlpha, 3, 2};
constexpr Fuel kCombinatorFuel = 4096;
constexpr std::size_t kCombinatorLen = 24;

std::set<Nat> engine_outputs(const Tree<Nat, Nat, Nat, Nat>& tree, Nat i,
                             const TableOracle<Nat, Nat>& table) {
  return to_set(
      enumerate_transcripts(tree.at(i), table, kCombinatorLen, kCombinatorFuel).outputs());
}

std::size_t family_size(const Family& f) {
  std::size_t n = 0;
  for (const auto& t : f) n += t.nodes.size();
  return n;
}

std::string family_string(const Family& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " | " : "") << i << ":" << f[i].describe();
  return os.str();
}

// Runs `compare` for every oracle and input and logs mismatches.
void over_oracles(FailureLog& log, const std::vector<OracleCase>& oracles, std::size_t size,
                  const std::function<std::string()>& instance,
                  const std::function<std::pair<std::set<Nat>, std::set<Nat>>(const OracleCase&, Nat)>&
                      engine_and_reference) {
  for (const auto& o : oracles) {
    for (Nat i = 0; i < kAlpha; ++i) {
      auto [got, want] = engine_and_reference(o, i);
      log.check(got == want, size, [&] {
        return instance() + " oracle " + describe(o.fn) + " input " + std::to_string(i) +
               ": tree " + set_string(got) + ", reference " + set_string(want);
      });
    }
  }
}

}  // namespace

std::vector<SuiteResult> combinator_equivalence(const SuiteOptions& opts) {
  const auto oracles = oracle_cases(kAlpha, kAlpha);
  std::vector<SuiteResult> results;
  Rng rng(opts.seed + 4);

  auto fresh = [](const char* name) {
    SuiteResult r;
    r.name = std::string("combinator ") + name;
    return r;
  };

  {
    SuiteResult r = fresh("precompose");
    FailureLog log(r);
    for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
      auto fam = std::make_shared<const Family>(random_family(rng, kCombinatorShape, kAlpha));
      std::vector<Nat> g(kAlpha);
      for (auto& v : g) v = uniform(rng, 0, kAlpha - 1);
      auto tree = precompose<Nat>([g](const Nat& i) { return g[i]; }, engine_tree(fam));
      over_oracles(log, oracles, family_size(*fam), [&] { return "family " + family_string(*fam); },
                   [&](const OracleCase& o, Nat i) {
                     return std::pair{engine_outputs(tree, i, o.table),
                                      reference_outputs((*fam)[g[i]], o.relation, kCombinatorLen)};
                   });
    }
    results.push_back(r);
  }

  {
    SuiteResult r = fresh("lifts (partial, total, constant, undefined)");
    FailureLog log(r);
    for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
      std::vector<std::optional<Nat>> f(kAlpha);
      std::vector<Fuel> cost(kAlpha);
      for (Nat i = 0; i < kAlpha; ++i) {
        const Nat v = uniform(rng, 0, kAlpha);
        if (v < kAlpha) f[i] = v;
        cost[i] = uniform(rng, 0, 3);
      }
      const Nat k = uniform(rng, 0, kAlpha - 1);
      using T = Tree<Nat, Nat, Nat, Nat>;
      std::vector<std::pair<T, std::function<std::set<Nat>(Nat)>>> lifts;
      lifts.emplace_back(of_partial_fn<Nat, Nat, Nat, Nat>([f, cost](const Nat& i) -> Partial<Nat> {
                           if (!f[i]) return undef<Nat>();
                           return delayed(Nat{*f[i]}, cost[i]);
                         }),
                         [f](Nat i) { return f[i] ? std::set<Nat>{*f[i]} : std::set<Nat>{}; });
      lifts.emplace_back(of_total<Nat, Nat, Nat, Nat>([k](const Nat& i) { return (i + k) % kAlpha; }),
                         [k](Nat i) { return std::set<Nat>{(i + k) % kAlpha}; });
      lifts.emplace_back(constant<Nat, Nat, Nat, Nat>(k), [k](Nat) { return std::set<Nat>{k}; });
      lifts.emplace_back(nowhere<Nat, Nat, Nat, Nat>(), [](Nat) { return std::set<Nat>{}; });
      for (const auto& [tree, want] : lifts) {
        over_oracles(log, oracles, kAlpha, [&] { return "lift of " + describe(f); },
                     [&](const OracleCase& o, Nat i) {
                       auto e = enumerate_transcripts(tree.at(i), o.table, kCombinatorLen,
                                                      kCombinatorFuel);
                       bool asked_nothing = true;
                       for (const auto& run : e.runs) asked_nothing &= run.transcript.size() == 0;
                       auto got = to_set(e.outputs());
                       if (!asked_nothing) got.insert(99);  // lifted functions never ask
                       return std::pair{got, want(i)};
                     });
      }
    }
    results.push_back(r);
  }

  {
    SuiteResult r = fresh("ident");
    FailureLog log(r);
    auto tree = ident<Nat, Nat>();
    for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
      const auto& o = oracles[uniform(rng, 0, oracles.size() - 1)];
      for (Nat i = 0; i < kAlpha; ++i) {
        auto got = engine_outputs(tree, i, o.table);
        std::set<Nat> want;
        if (auto it = o.relation.find(i); it != o.relation.end()) want.insert(it->second.begin(), it->second.end());
        log.check(got == want, 1, [&] {
          return "oracle " + describe(o.fn) + " input " + std::to_string(i) + ": tree " +
                 set_string(got) + ", reference " + set_string(want);
        });
      }
    }
    results.push_back(r);
  }

  {
    SuiteResult r = fresh("ite");
    FailureLog log(r);
    for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
      auto a = std::make_shared<const Family>(random_family(rng, kCombinatorShape, kAlpha));
      auto b = std::make_shared<const Family>(random_family(rng, kCombinatorShape, kAlpha));
      std::vector<bool> test(kAlpha);
      for (Nat i = 0; i < kAlpha; ++i) test[i] = uniform(rng, 0, 1) == 1;
      auto tree = ite([test](const Nat& i) { return bool(test[i]); }, engine_tree(a), engine_tree(b));
      over_oracles(log, oracles, family_size(*a) + family_size(*b),
                   [&] { return "then " + family_string(*a) + " else " + family_string(*b); },
                   [&](const OracleCase& o, Nat i) {
                     const auto& chosen = test[i] ? (*a)[i] : (*b)[i];
                     return std::pair{engine_outputs(tree, i, o.table),
                                      reference_outputs(chosen, o.relation, kCombinatorLen)};
                   });
    }
    results.push_back(r);
  }

  {
    SuiteResult r = fresh("seq_bind");
    FailureLog log(r);
    for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
      auto first = std::make_shared<const Family>(random_family(rng, kCombinatorShape, kAlpha));
      auto second =
          std::make_shared<const Family>(random_family(rng, kCombinatorShape, kAlpha * kAlpha));
      auto second_tree = Tree<std::pair<Nat, Nat>, Nat, Nat, Nat>(
          [second](const std::pair<Nat, Nat>& io, const std::vector<Nat>& ans) {
            return engine_node((*second)[io.first * kAlpha + io.second].find(ans));
          });
      auto tree = seq_bind(engine_tree(first), second_tree);
      over_oracles(log, oracles, family_size(*first) + family_size(*second),
                   [&] { return "first " + family_string(*first) + " second " + family_string(*second); },
                   [&](const OracleCase& o, Nat i) {
                     std::set<Nat> want;
                     for (Nat mid : reference_outputs((*first)[i], o.relation, kCombinatorLen)) {
                       auto more = reference_outputs((*second)[i * kAlpha + mid], o.relation,
                                                     kCombinatorLen);
                       want.insert(more.begin(), more.end());
                     }
                     return std::pair{engine_outputs(tree, i, o.table), want};
                   });
    }
    results.push_back(r);
  }

  {
    SuiteResult r = fresh("compose_trees");
    FailureLog log(r);
    for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
      auto inner = std::make_shared<const Family>(random_family(rng, kCombinatorShape, kAlpha));
      auto outer = std::make_shared<const Family>(random_family(rng, kCombinatorShape, kAlpha));
      auto tree = compose_trees(engine_tree(inner), engine_tree(outer));
      over_oracles(log, oracles, family_size(*inner) + family_size(*outer),
                   [&] { return "inner " + family_string(*inner) + " outer " + family_string(*outer); },
                   [&](const OracleCase& o, Nat i) {
                     // inner tree's input/output relation, then the outer tree over it
                     Relation inner_rel;
                     for (Nat x = 0; x < kAlpha; ++x) {
                       auto ys = reference_outputs((*inner)[x], o.relation, kCombinatorLen);
                       if (!ys.empty()) inner_rel[x] = {ys.begin(), ys.end()};
                     }
                     return std::pair{engine_outputs(tree, i, o.table),
                                      reference_outputs((*outer)[i], inner_rel, kCombinatorLen)};
                   });
    }
    results.push_back(r);
  }

  {
    SuiteResult r = fresh("search");
    FailureLog log(r);
    constexpr Nat kRows = 6;
    auto tree = search<Nat>();
    for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
      // answer for (i, n): 0 false, 1 true, 2 undefined
      std::vector<std::vector<Nat>> cells(kAlpha, std::vector<Nat>(kRows));
      TableOracle<std::pair<Nat, Nat>, bool> table;
      for (Nat i = 0; i < kAlpha; ++i) {
        for (Nat n = 0; n < kRows; ++n) {
          const Nat roll = uniform(rng, 0, 9);
          cells[i][n] = roll < 6 ? 0 : roll < 9 ? 1 : 2;
          if (cells[i][n] != 2) table.entries.push_back({{i, n}, {cells[i][n] == 1}});
        }
      }
      for (Nat i = 0; i < kAlpha; ++i) {
        std::set<Nat> want;
        for (Nat n = 0; n < kRows && cells[i][n] != 2; ++n) {
          if (cells[i][n] == 1) {
            want.insert(n);
            break;
          }
        }
        auto got = to_set(
            enumerate_transcripts(tree.at(i), table, kRows + 1, kCombinatorFuel).outputs());
        log.check(got == want, kRows, [&] {
          std::ostringstream os;
          os << "row " << i << " cells";
          for (Nat v : cells[i]) os << ' ' << v;
          os << ": tree " << set_string(got) << ", reference " << set_string(want);
          return os.str();
        });
      }
    }
    results.push_back(r);
  }

  return results;
}

SuiteResult elaboration_soundness(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "stalling-tree elaboration soundness";
  FailureLog log(r);
  const auto oracles = oracle_cases(kAlpha, kAlpha);
  Rng rng(opts.seed + 5);
  for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
    auto tree = std::make_shared<const FiniteStallTree>(random_stall_tree(rng, kCombinatorShape, 5));
    auto plain = stall_to_plain(engine_stall_tree(tree));
    for (const auto& o : oracles) {
      auto got = engine_outputs(plain, 0, o.table);
      auto want = reference_stall_outputs(*tree, o.relation, kCombinatorLen);
      log.check(got == want, tree->nodes.size(), [&] {
        return "stall tree " + tree->describe() + " oracle " + describe(o.fn) + ": plain " +
               set_string(got) + ", stalling " + set_string(want);
      });
    }
  }
  r.note = "stall chains 0..5, 64 partial oracles over {0..2}";
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult truth_table_agreement(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "truth-table reductions agree with direct evaluation";
  FailureLog log(r);
  Rng rng(opts.seed + 7);
  constexpr Nat kModulus = 41;
  const std::vector<std::pair<std::string, std::function<bool(const Nat&)>>> predicates = {
      {"evens", [](const Nat& y) { return y % 2 == 0; }},
      {"odds", [](const Nat& y) { return y % 2 == 1; }},
      {"mod3", [](const Nat& y) { return y % 3 == 0; }},
      {"prime",
       [](const Nat& y) {
         if (y < 2) return false;
         for (Nat d = 2; d * d <= y; ++d) {
           if (y % d == 0) return false;
         }
         return true;
       }},
  };
  for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
    const std::size_t k = uniform(rng, 0, 3);
    std::vector<std::pair<Nat, Nat>> affine(k);
    for (auto& [a, b] : affine) {
      a = uniform(rng, 0, kModulus - 1);
      b = uniform(rng, 0, kModulus - 1);
    }
    std::vector<std::vector<bool>> tables(5, std::vector<bool>(std::size_t{1} << k));
    for (auto& t : tables) {
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = uniform(rng, 0, 1) == 1;
    }
    const auto& [pname, q] = predicates[uniform(rng, 0, predicates.size() - 1)];
    TruthTable<Nat, Nat> tt{
        [affine](const Nat& x) {
          std::vector<Nat> ys;
          for (const auto& [a, b] : affine) ys.push_back((a * x + b) % kModulus);
          return ys;
        },
        [tables](const Nat& x) { return tables[x % tables.size()]; }};
    auto red = tt_to_turing(tt, opts.indexing);
    auto oracle = char_oracle<Nat>(q);
    for (Nat x = 0; x <= 20; ++x) {
      const auto ys = tt.queries(x);
      std::vector<bool> answers;
      for (Nat y : ys) answers.push_back(q(y));
      const bool consistent = forall2(
          [&q](const Nat& y, bool b) { return q(y) == b; }, ys, answers);
      const bool expected = tt_eval(answers, tt.table(x));
      auto got = delta(red.tree.at(x), oracle, Budget{k, 16}).value();
      log.check(consistent && got && *got == expected, k, [&] {
        std::ostringstream os;
        os << "q=" << pname << " x=" << x << " queries";
        for (Nat y : ys) os << ' ' << y;
        os << " table";
        for (bool b : tt.table(x)) os << ' ' << b;
        os << ": turing " << (got ? (*got ? "true" : "false") : "none") << ", direct "
           << (expected ? "true" : "false");
        return os.str();
      });
    }
  }
  r.note = "inputs 0..20, k <= 3";
  return r;
}

SuiteResult modulus_property(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "modulus of continuity";
  FailureLog log(r);
  auto threshold = threshold_tree();
  // fixed threshold inputs count as checks only
  for (Nat i = 0; i <= 8; ++i) {
    auto all_true = total_oracle<Nat, bool>([](const Nat&) { return true; });
    const Budget budget{16, 16};
    auto modulus = extract_modulus(threshold.at(i), all_true, budget);
    std::vector<Nat> expected;
    for (Nat q = 0; q < i; ++q) expected.push_back(q);
    log.check(modulus && *modulus == expected, i, [&] {
      return "threshold " + std::to_string(i) + ": unexpected modulus";
    });
    for (Nat q = 0; q <= 20; ++q) {
      if (std::find(expected.begin(), expected.end(), q) != expected.end()) continue;
      auto perturbed = total_oracle<Nat, bool>([q](const Nat& y) { return y != q; });
      auto v = delta(threshold.at(i), perturbed, budget).value();
      log.check(v && *v, i, [&] {
        return "threshold " + std::to_string(i) + ": perturbing " + std::to_string(q) +
               " changed the output";
      });
    }
  }

  Rng rng(opts.seed + 9);
  const auto totals = all_total_functions(4, 4);
  std::size_t converging = 0;
  for (std::size_t attempt = 0; converging < opts.cases && attempt < opts.cases * 50; ++attempt) {
    auto tree = std::make_shared<const FiniteTree>(random_tree(rng, kInterrogationShape));
    const auto& fn = totals[uniform(rng, 0, totals.size() - 1)];
    auto sigma = engine_fixed(tree);
    const Budget budget{kInterrogationLen, kInterrogationFuel};
    auto run = delta(sigma, to_fn_oracle(fn), budget);
    auto modulus = extract_modulus(sigma, to_fn_oracle(fn), budget);
    if (!run.value()) continue;
    ++converging;
    ++r.cases;
    for (Nat q = 0; q < 4; ++q) {
      if (std::find(modulus->begin(), modulus->end(), q) != modulus->end()) continue;
      for (Nat alt = 0; alt <= 4; ++alt) {
        auto changed = fn;
        changed[q] = alt == 4 ? std::nullopt : std::optional<Nat>(alt);
        auto v = delta(sigma, to_fn_oracle(changed), budget).value();
        log.check(v == run.value(), tree->nodes.size(), [&] {
          return "tree " + tree->describe() + " oracle " + describe(fn) + " perturbed at " +
                 std::to_string(q) + " to " + describe(changed);
        });
      }
    }
  }
  if (converging < opts.cases) {
    r.passed = false;
    r.counterexample = "only " + std::to_string(converging) + " converging runs generated";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Partial values: random expressions interpreted twice, by the kernel and by
// a direct evaluator.

namespace {

struct Expr {
  Partial<Nat> value;
  std::optional<Nat> expected;  // nullopt: diverges
  std::string text;
};

Expr random_expr(Rng& rng, int depth) {
  const Nat pick = depth <= 0 ? uniform(rng, 0, 1) : uniform(rng, 0, 6);
  switch (pick) {
    case 0: {
      const Nat v = uniform(rng, 0, 9);
      return {ret(Nat{v}), v, "ret " + std::to_string(v)};
    }
    case 1:
      if (uniform(rng, 0, 2) == 0) return {undef<Nat>(), std::nullopt, "undef"};
      {
        const Nat v = uniform(rng, 0, 9);
        const Fuel c = uniform(rng, 1, 4);
        return {checks::delayed(Nat{v}, c), v,
                "delay " + std::to_string(c) + " " + std::to_string(v)};
      }
    case 2: {
      auto e = random_expr(rng, depth - 1);
      const Nat k = uniform(rng, 0, 5);
      return {e.value.bind([k](const Nat& v) { return ret(v + k); }),
              e.expected ? std::optional<Nat>(*e.expected + k) : std::nullopt,
              "(" + e.text + ") >>= +" + std::to_string(k)};
    }
    case 3: {
      auto e = random_expr(rng, depth - 1);
      return {e.value.bind([](const Nat& v) { return v % 2 ? undef<Nat>() : ret(v / 2); }),
              e.expected && *e.expected % 2 == 0 ? std::optional<Nat>(*e.expected / 2)
                                                 : std::nullopt,
              "(" + e.text + ") >>= halve-even"};
    }
    case 4: {
      auto a = random_expr(rng, depth - 1);
      auto b = std::make_shared<Expr>(random_expr(rng, depth - 1));
      return {a.value.bind([b](const Nat& v) { return b->value.map([v](const Nat& w) { return v * 10 + w; }); }),
              a.expected && b->expected ? std::optional<Nat>(*a.expected * 10 + *b->expected)
                                        : std::nullopt,
              "(" + a.text + ") >>= (" + b->text + ")"};
    }
    default: {
      // μ over a small table of sub-expressions, false beyond the table
      const std::size_t len = uniform(rng, 0, 4);
      auto rows = std::make_shared<std::vector<Expr>>();
      for (std::size_t k = 0; k < len; ++k) rows->push_back(random_expr(rng, depth - 1));
      std::optional<Nat> expected;
      std::string text = "mu[";
      for (std::size_t k = 0; k < len; ++k) {
        text += (k ? ", " : "") + (*rows)[k].text + " odd?";
      }
      text += "]";
      for (std::size_t k = 0; k < len; ++k) {
        const auto& row = (*rows)[k].expected;
        if (!row) break;
        if (*row % 2 == 1) {
          expected = k;
          break;
        }
      }
      return {mu([rows](Nat n) -> Partial<bool> {
                if (n >= rows->size()) return ret(false);
                return (*rows)[n].value.map([](const Nat& v) { return v % 2 == 1; });
              }),
              expected, text};
    }
  }
}

}  // namespace

SuiteResult partiality_laws(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "partial value laws";
  FailureLog log(r);
  Rng rng(opts.seed + 11);
  constexpr Fuel kSweep = 50;
  constexpr Fuel kAmple = 2000;
  for (std::size_t c = 0; c < opts.cases; ++c, ++r.cases) {
    auto e = random_expr(rng, 5);
    std::optional<Nat> seen;
    bool ok = true;
    for (Fuel n = 0; n <= kSweep && ok; ++n) {
      auto v = e.value.eval(n);
      if (seen) ok = v == seen;  // monotone
      if (v) {
        seen = v;
        ok = ok && e.expected == v;  // determinate and correct
      }
    }
    ok = ok && e.value.eval(kAmple) == e.expected;
    log.check(ok, e.text.size(), [&] { return e.text; });

    // monad laws on the same expression
    auto f = [](const Nat& v) { return v % 3 == 0 ? undef<Nat>() : ret(v + 1); };
    auto g = [](const Nat& v) { return ret(v * 2); };
    const Nat k = uniform(rng, 0, 9);
    for (Fuel n = 0; n <= kSweep; n += 5) {
      log.check(ret(Nat{k}).bind(f).eval(n) == f(k).eval(n), 1, [&] { return "left identity at " + std::to_string(k); });
      log.check(e.value.bind([](const Nat& v) { return ret(v); }).eval(n) == e.value.eval(n),
                e.text.size(), [&] { return "right identity: " + e.text; });
      auto lhs = e.value.bind(f).bind(g);
      auto rhs = e.value.bind([f, g](const Nat& v) { return f(v).bind(g); });
      log.check(lhs.eval(kAmple) == rhs.eval(kAmple), e.text.size(),
                [&] { return "associativity: " + e.text; });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

bool even(const Nat& x) { return x % 2 == 0; }

Tree<Nat, Nat, bool, Unit> accept_when_answer_is(bool wanted) {
  return Tree<Nat, Nat, bool, Unit>(
      [wanted](const Nat& x, const std::vector<bool>& ans) -> Partial<Node<Nat, Unit>> {
        if (ans.empty()) return ask<Nat, Unit>(x);
        if (ans.front() == wanted) return out<Nat, Unit>(star);
        return undef<Node<Nat, Unit>>();
      });
}

// Asks x+1 first and ignores it, then accepts iff x is answered false.
Tree<Nat, Nat, bool, Unit> reject_after_detour() {
  return Tree<Nat, Nat, bool, Unit>(
      [](const Nat& x, const std::vector<bool>& ans) -> Partial<Node<Nat, Unit>> {
        if (ans.empty()) return ask<Nat, Unit>(x + 1);
        if (ans.size() == 1) return ask<Nat, Unit>(x);
        if (!ans[1]) return out<Nat, Unit>(star);
        return undef<Node<Nat, Unit>>();
      });
}

// The same semi-decider, slowed down by k stalls before its first move.
Tree<Nat, Nat, bool, Unit> padded(Tree<Nat, Nat, bool, Unit> tree, Nat k) {
  using N = StallNode<Nat, Nat, Unit>;
  StallTree<Nat, Nat, Nat, bool, Unit> st{
      [tree, k](const Nat& x, const Nat& s, const std::vector<bool>& ans) -> Partial<N> {
        if (s < k) return stall<Nat, Nat, Unit>(s + 1);
        return tree(x, ans).bind([k](const Node<Nat, Unit>& n) -> Partial<N> {
          if (const Nat* q = asked(n)) return stall_ask<Nat, Nat, Unit>(k, *q);
          return stall_out<Nat, Nat, Unit>(star);
        });
      },
      0};
  return stall_to_plain(st);
}

OracleSemiDecider<Nat, Nat> parity_side(bool member) {
  return sdec_from_plain<Nat, Nat>(from_step_indexed<Nat>(
      [member](const Nat& x, Nat n) { return even(x) == member && n >= x; }));
}

}  // namespace

SuiteResult post_theorem_fixtures() {
  SuiteResult r;
  r.name = "Post's theorem fixtures";
  FailureLog log(r);
  const auto trivial = total_oracle<Nat, bool>([](const Nat&) { return true; });
  const Budget budget{8, 256};

  auto parity = pt_reduce(parity_side(true), parity_side(false));
  for (Nat x = 0; x <= 50; ++x, ++r.cases) {
    auto run = delta(parity.tree.at(x), trivial, budget);
    log.check(run.value() == std::optional<bool>(even(x)) && run.transcript().size() == 0, x,
              [&] { return "parity fixture at " + std::to_string(x); });
  }

  OracleSemiDecider<Nat, Nat> yes{accept_when_answer_is(true)};
  OracleSemiDecider<Nat, Nat> no{accept_when_answer_is(false)};
  auto passthrough = pt_reduce(yes, no);
  auto detour = pt_reduce(yes, OracleSemiDecider<Nat, Nat>{reject_after_detour()});
  auto refl = reduce_refl<Nat>();
  constexpr Nat kDomain = 11;
  for (std::uint32_t bits = 0; bits < (1u << kDomain); ++bits) {
    TableOracle<Nat, bool> table;
    for (Nat y = 0; y < kDomain; ++y) table.entries.push_back({y, {bool((bits >> y) & 1u)}});
    for (Nat x = 0; x < kDomain; ++x) {
      for (bool drop_x : {false, true}) {
        if (drop_x && bits >= (1u << kDomain) / 2) continue;  // one partial variant per x suffices
        TableOracle<Nat, bool> t = table;
        if (drop_x) t.entries.erase(t.entries.begin() + static_cast<std::ptrdiff_t>(x));
        auto got = to_set(enumerate_transcripts(passthrough.tree.at(x), t, 8, 256).outputs());
        auto want = to_set(enumerate_transcripts(refl.tree.at(x), t, 8, 256).outputs());
        log.check(got == want, x, [&] {
          return "passthrough fixture at " + std::to_string(x) + " oracle bits " +
                 std::to_string(bits) + (drop_x ? " without x" : "");
        });
        if (drop_x || x + 1 >= kDomain) continue;
        auto split = to_set(enumerate_transcripts(detour.tree.at(x), t, 8, 256).outputs());
        log.check(split == want, x, [&] {
          return "detour fixture at " + std::to_string(x) + " oracle bits " + std::to_string(bits);
        });
      }
    }
  }
  r.cases += kDomain;

  for (Nat k1 = 0; k1 <= 5; ++k1) {
    for (Nat k2 = 0; k2 <= 5; ++k2) {
      ++r.cases;
      auto slow_parity = pt_reduce(OracleSemiDecider<Nat, Nat>{padded(parity_side(true).tree, k1)},
                                   OracleSemiDecider<Nat, Nat>{padded(parity_side(false).tree, k2)});
      for (Nat x = 0; x <= 20; ++x) {
        auto v = delta(slow_parity.tree.at(x), trivial, budget).value();
        log.check(v == std::optional<bool>(even(x)), x, [&] {
          return "padded parity k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
                 " at " + std::to_string(x);
        });
      }
      auto slow_pass = pt_reduce(OracleSemiDecider<Nat, Nat>{padded(yes.tree, k1)},
                                 OracleSemiDecider<Nat, Nat>{padded(no.tree, k2)});
      for (Nat x = 0; x <= 10; ++x) {
        for (bool qx : {false, true}) {
          auto oracle = total_oracle<Nat, bool>([x, qx](const Nat& y) { return y == x ? qx : !qx; });
          auto v = delta(slow_pass.tree.at(x), oracle, Budget{8, 512}).value();
          log.check(v == std::optional<bool>(qx), x, [&] {
            return "padded passthrough k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
                   " at " + std::to_string(x);
          });
        }
      }
    }
  }
  r.note = "parity 0..50 at budget (8, 256); passthrough over all 2^11 boolean tables; paddings 0..5";
  return r;
}

SuiteResult hypersimple_fixtures() {
  SuiteResult r;
  r.name = "deficiency-predicate reduction";
  FailureLog log(r);
  struct Fixture {
    Enumerator e;
    std::function<bool(Nat)> in_i;       // analytic range
    std::function<bool(Nat)> in_h;       // analytic deficiency set
  };
  const std::vector<Fixture> fixtures = {
      {doubling_enumerator(), [](Nat z) { return z % 2 == 0; }, [](Nat) { return false; }},
      {xor1_enumerator(), [](Nat) { return true; }, [](Nat x) { return x % 2 == 0; }},
  };
  for (const auto& fx : fixtures) {
    // For these enumerators a witness, when one exists, is x + 1.
    auto h = [e = fx.e](const Nat& x) {
      return deficiency(e, x, x + 2) == Deficiency::deficient;
    };
    for (Nat x = 0; x <= 200; ++x) {
      log.check(h(x) == fx.in_h(x), 0, [&] {
        return fx.e.name + ": deficiency oracle wrong at " + std::to_string(x);
      });
    }
    auto red = deficiency_reduction(fx.e);
    auto oracle = total_oracle<Nat, bool>(h);
    for (Nat z = 0; z <= 50; ++z, ++r.cases) {
      auto v = delta(red.tree.at(z), oracle, Budget{200, 16}).value();
      log.check(v == std::optional<bool>(fx.in_i(z)), z, [&] {
        return fx.e.name + ": verdict at z=" + std::to_string(z);
      });
    }
  }
  r.note = "z in 0..50; deficiency oracle from deficiency(e, x, x+2), checked on 0..200";
  return r;
}

SuiteResult decidability_transport() {
  SuiteResult r;
  r.name = "decidability transport";
  FailureLog log(r);
  const Budget budget{64, 64};
  std::vector<Nat> xs;
  for (Nat x = 0; x <= 100; ++x) xs.push_back(x);
  const std::function<bool(const Nat&)> evens = even;

  struct Case {
    std::string name;
    TuringReduction<Nat, Nat> red;
    std::function<bool(Nat)> p;
  };
  TruthTable<Nat, Nat> majority{
      [](const Nat& x) { return std::vector<Nat>{x, x + 1, x + 2}; },
      [](const Nat&) {
        std::vector<bool> t(8);
        for (std::size_t j = 0; j < 8; ++j) t[j] = __builtin_popcount(static_cast<unsigned>(j)) >= 2;
        return t;
      }};
  OracleSemiDecider<Nat, Nat> yes{accept_when_answer_is(true)};
  OracleSemiDecider<Nat, Nat> no{accept_when_answer_is(false)};
  const std::vector<Case> cases = {
      {"refl", reduce_refl<Nat>(), [](Nat x) { return even(x); }},
      {"manyone x+1", manyone_to_turing<Nat, Nat>([](const Nat& x) { return x + 1; }),
       [](Nat x) { return !even(x); }},
      {"complement", complement_reduction<Nat>(), [](Nat x) { return !even(x); }},
      {"tt majority", tt_to_turing(majority), [](Nat x) { return even(x); }},
      {"pt passthrough", pt_reduce(yes, no), [](Nat x) { return even(x); }},
  };
  for (const auto& c : cases) {
    for (const auto& d : decide_via_reduction(c.red, evens, xs, budget)) {
      ++r.cases;
      const Decision want = c.p(d.x) ? Decision::yes : Decision::no;
      log.check(d.verdict == want, d.x, [&] {
        return c.name + " at " + std::to_string(d.x) + ": " + to_string(d.verdict);
      });
    }
  }
  r.note = "inputs 0..100, oracle evens, budget (64, 64)";
  return r;
}

std::vector<SuiteResult> run_property_suites(const SuiteOptions& opts) {
  std::vector<SuiteResult> all;
  all.push_back(partiality_laws(opts));
  all.push_back(interrogation_equivalence(opts));
  all.push_back(prefix_determinacy(opts));
  all.push_back(concatenation_law(opts));
  for (auto& s : combinator_equivalence(opts)) all.push_back(std::move(s));
  all.push_back(elaboration_soundness(opts));
  all.push_back(truth_table_agreement(opts));
  all.push_back(modulus_property(opts));
  return all;
}

}  // namespace oc::checks
