// oraclecomp: run oracle trees and reductions from the command line.
//
// Every machine-readable result is a JSON line on stdout; summaries and
// diagnostics go to stderr.

#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oraclecomp/checks/suites.hpp"
#include "oraclecomp/combinators.hpp"
#include "oraclecomp/evaluator.hpp"
#include "oraclecomp/json_io.hpp"
#include "oraclecomp/post.hpp"
#include "oraclecomp/reducibility.hpp"
#include "oraclecomp/truthtable.hpp"

using namespace oc;
using nlohmann::json;
using Line = nlohmann::ordered_json;

namespace {

constexpr int kExitOut = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitQuestion = 3;
constexpr int kExitPropertyFailure = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Pred = std::function<bool(const Nat&)>;

const std::map<std::string, Pred>& predicates() {
  static const std::map<std::string, Pred> table = {
      {"evens", [](const Nat& q) { return q % 2 == 0; }},
      {"odds", [](const Nat& q) { return q % 2 == 1; }},
      {"parity-of", [](const Nat& q) { return std::popcount(q) % 2 == 1; }},
      {"all-true", [](const Nat&) { return true; }},
      {"all-false", [](const Nat&) { return false; }},
  };
  return table;
}

Pred predicate(const std::string& name) {
  auto it = predicates().find(name);
  if (it == predicates().end()) throw UsageError("unknown predicate '" + name + "'");
  return it->second;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

// A built-in name, or a JSON table file of {"q": n, "a": [bools]}.
FnOracle<Nat, bool> load_oracle(const std::string& spec) {
  if (predicates().count(spec)) return char_oracle<Nat>(predicate(spec));
  json j = read_json(spec);
  if (!j.is_array()) throw UsageError("oracle table must be a JSON array");
  TableOracle<Nat, bool> table;
  try {
    for (const auto& entry : j) {
      const Nat q = entry.at("q").get<Nat>();
      if (table.answers_for(q)) throw UsageError("question " + std::to_string(q) + " listed twice");
      table.entries.push_back({q, entry.at("a").get<std::vector<bool>>()});
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed oracle entry: ") + e.what());
  }
  if (!table.functional()) throw UsageError("oracle table gives several answers to one question");
  return as_function(table);
}

std::vector<Nat> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const Nat lo = std::stoull(a, &used_a);
    const Nat hi = std::stoull(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || lo > hi || a[0] == '-' || b[0] == '-') {
      throw UsageError("bad range '" + text + "'");
    }
    std::vector<Nat> xs;
    for (Nat x = lo; x <= hi; ++x) xs.push_back(x);
    return xs;
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "'");
  }
}

Enumerator enumerator(const std::string& name) {
  if (name == "double") return doubling_enumerator();
  if (name == "xor1") return xor1_enumerator();
  throw UsageError("unknown enumerator '" + name + "'");
}

// Deficiency set of the built-in enumerators, whose deficiency witnesses are always x+1.
FnOracle<Nat, bool> deficiency_oracle(const Enumerator& e) {
  return total_oracle<Nat, bool>(
      [e](const Nat& x) { return deficiency(e, x, x + 2) == Deficiency::deficient; });
}

TruthTable<Nat, Nat> load_truth_table(const std::string& path) {
  json j = read_json(path);
  std::vector<Nat> offsets;
  std::vector<bool> table;
  try {
    offsets = j.at("queries").get<std::vector<Nat>>();
    table = j.at("table").get<std::vector<bool>>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed truth table: ") + e.what());
  }
  if (offsets.size() >= 16 || table.size() != (std::size_t{1} << offsets.size())) {
    throw UsageError("truth table needs 2^k rows for k queries");
  }
  return {[offsets](const Nat& x) {
            std::vector<Nat> qs;
            for (Nat d : offsets) qs.push_back(x + d);
            return qs;
          },
          [table](const Nat&) { return table; }};
}

OracleSemiDecider<Nat, Nat> step_indexed_side(Pred p, bool member) {
  return sdec_from_plain<Nat, Nat>(from_step_indexed<Nat>(
      [p, member](const Nat& x, Nat n) { return p(x) == member && n >= x; }));
}

OracleSemiDecider<Nat, Nat> passthrough_side(bool wanted) {
  return {Tree<Nat, Nat, bool, Unit>(
      [wanted](const Nat& x, const std::vector<bool>& ans) -> Partial<Node<Nat, Unit>> {
        if (ans.empty()) return ask<Nat, Unit>(x);
        if (ans.front() == wanted) return out<Nat, Unit>(star);
        return undef<Node<Nat, Unit>>();
      })};
}

template <class J>
void print_line(const J& j) {
  std::cout << j.dump() << '\n';
}

void summarise(const std::vector<DecisionEntry<Nat>>& ds) {
  std::size_t yes = 0, no = 0, timeout = 0;
  for (const auto& d : ds) {
    (d.verdict == Decision::yes ? yes : d.verdict == Decision::no ? no : timeout) += 1;
  }
  std::cerr << ds.size() << " inputs: " << yes << " true, " << no << " false, " << timeout
            << " timeout\n";
}

struct Options {
  Nat input = 0;
  std::string range = "0..10";
  std::optional<std::string> oracle;
  std::string enum_name = "double";
  Nat qfuel = 64;
  Fuel sfuel = 256;
  std::uint64_t seed = 42;
  std::size_t cases = 200;
  Nat shift = 1;
  std::string table;
  std::string p = "evens";
  bool break_tt = false;
  std::string tree;
  std::string kind;
};

Budget budget(const Options& o) { return Budget{o.qfuel, o.sfuel}; }

template <class Q, class O>
int exit_for(const RunOutcome<Q, bool, O>& r) {
  if (r.as_output()) return kExitOut;
  if (r.as_question()) return kExitQuestion;
  return kExitTimeout;
}

int cmd_run(const Options& o) {
  auto f = load_oracle(o.oracle.value_or("all-true"));
  const Budget b = budget(o);
  if (o.tree == "threshold" || o.tree == "ident" || o.tree == "complement") {
    Tree<Nat, Nat, bool, bool> t = o.tree == "threshold" ? threshold_tree()
                                   : o.tree == "ident"   ? ident<Nat, bool>()
                                                         : complement_reduction<Nat>().tree;
    auto r = delta(t.at(o.input), f, b);
    print_line(outcome_json(r, b));
    return exit_for(r);
  }
  if (o.tree == "search") {
    // (i, n) is answered by the oracle at i + n
    using Q = std::pair<Nat, Nat>;
    FnOracle<Q, bool> shifted{[f](const Q& q) { return f(q.first + q.second); }};
    auto r = delta(search<Nat>().at(o.input), shifted, b);
    print_line(outcome_json(r, b));
    return exit_for(r);
  }
  throw UsageError("unknown tree '" + o.tree + "' (threshold, ident, search, complement)");
}

int cmd_reduce(const Options& o) {
  const auto xs = parse_range(o.range);
  TuringReduction<Nat, Nat> red;
  FnOracle<Nat, bool> f;
  if (o.kind == "refl") {
    red = reduce_refl<Nat>();
  } else if (o.kind == "manyone") {
    red = manyone_to_turing<Nat, Nat>([k = o.shift](const Nat& x) { return x + k; });
  } else if (o.kind == "complement") {
    red = complement_reduction<Nat>();
  } else if (o.kind == "tt") {
    if (o.table.empty()) throw UsageError("reduce tt needs --table FILE");
    red = tt_to_turing(load_truth_table(o.table));
  } else if (o.kind == "deficiency") {
    auto e = enumerator(o.enum_name);
    red = deficiency_reduction(e);
    f = o.oracle ? load_oracle(*o.oracle) : deficiency_oracle(e);
  } else if (o.kind == "pt") {
    auto p = predicate(o.p);
    red = pt_reduce(step_indexed_side(p, true), step_indexed_side(p, false));
    f = load_oracle(o.oracle.value_or("all-true"));
  } else {
    throw UsageError("unknown reduction '" + o.kind +
                     "' (refl, manyone, complement, tt, deficiency, pt)");
  }
  if (o.kind != "deficiency" && o.kind != "pt") {
    if (!o.oracle) throw UsageError("reduce " + o.kind + " needs --oracle");
    f = load_oracle(*o.oracle);
  }
  auto ds = decide_via_reduction(red, f, xs, budget(o));
  for (const auto& d : ds) print_line(Line{{"x", d.x}, {"verdict", to_string(d.verdict)}});
  summarise(ds);
  return kExitOut;
}

Line decision_line(const char* key, Nat x, const RunOutcome<Nat, bool, bool>& r) {
  Line j = {{key, x}};
  j["verdict"] = r.value() ? (*r.value() ? "true" : "false") : r.as_question() ? "ask" : "timeout";
  j["qs"] = r.transcript().qs;
  j["ans"] = r.transcript().ans;
  return j;
}

// With --p, decides p from its two step-indexed semi-deciders; otherwise
// relays the oracle through the ask-and-accept semi-deciders.
int cmd_pt(const Options& o, bool p_given) {
  const auto xs = parse_range(o.range);
  auto f = load_oracle(o.oracle.value_or("all-true"));
  auto red = p_given ? pt_reduce(step_indexed_side(predicate(o.p), true),
                                 step_indexed_side(predicate(o.p), false))
                     : pt_reduce(passthrough_side(true), passthrough_side(false));
  std::size_t decided = 0;
  for (Nat x : xs) {
    auto r = delta(red.tree.at(x), f, budget(o));
    decided += r.value().has_value();
    print_line(decision_line("x", x, r));
  }
  std::cerr << decided << " of " << xs.size() << " inputs decided\n";
  return kExitOut;
}

int cmd_tt(const Options& o) {
  if (o.table.empty()) throw UsageError("tt needs --table FILE");
  const auto xs = parse_range(o.range);
  auto tt = load_truth_table(o.table);
  auto q = predicate(o.oracle.value_or("evens"));
  auto red = tt_to_turing(tt);
  std::size_t agree = 0;
  for (Nat x : xs) {
    std::vector<bool> answers;
    for (Nat y : tt.queries(x)) answers.push_back(q(y));
    const bool direct = tt_eval(answers, tt.table(x));
    auto r = delta(red.tree.at(x), char_oracle<Nat>(q), budget(o));
    Line j = decision_line("x", x, r);
    j["direct"] = direct;
    agree += r.value() == std::optional<bool>(direct);
    print_line(j);
  }
  std::cerr << agree << " of " << xs.size() << " verdicts agree with direct evaluation\n";
  return kExitOut;
}

int cmd_hypersimple(const Options& o) {
  const auto zs = parse_range(o.range);
  auto e = enumerator(o.enum_name);
  auto red = deficiency_reduction(e);
  auto h = deficiency_oracle(e);
  std::size_t members = 0;
  for (Nat z : zs) {
    auto r = delta(red.tree.at(z), h, budget(o));
    members += r.value() == std::optional<bool>(true);
    print_line(decision_line("z", z, r));
  }
  std::cerr << e.name << ": " << members << " of " << zs.size() << " inputs in the range\n";
  return kExitOut;
}

int cmd_selftest(const Options& o) {
  checks::SuiteOptions opts{o.seed, o.cases,
                            o.break_tt ? TableIndexing::little_endian : TableIndexing::big_endian};
  bool ok = true;
  std::size_t cases = 0;
  for (const auto& r : checks::run_property_suites(opts)) {
    cases += r.cases;
    print_line(Line{{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"checks", r.checks}});
    if (!r.passed) {
      ok = false;
      std::cerr << "FAIL " << r.name << "\n  counterexample: " << r.counterexample << '\n';
    }
  }
  std::cerr << (ok ? "all suites passed" : "property failure") << ", " << cases << " cases\n";
  return ok ? kExitOut : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run oracle computation trees and reductions"};
  app.require_subcommand(1);
  Options o;

  auto fuel_flags = [&o](CLI::App* sub) {
    sub->add_option("--qfuel", o.qfuel, "maximum oracle questions");
    sub->add_option("--sfuel", o.sfuel, "step fuel per partial value");
  };

  auto* run = app.add_subcommand("run", "run a built-in tree against an oracle");
  run->add_option("tree", o.tree, "threshold | ident | search | complement")->required();
  run->add_option("--input", o.input, "tree input");
  run->add_option("--oracle", o.oracle, "evens | odds | parity-of | all-true | all-false | FILE");
  fuel_flags(run);

  auto* reduce = app.add_subcommand("reduce", "decide a range of inputs through a reduction");
  reduce->add_option("kind", o.kind, "refl | manyone | complement | tt | deficiency | pt")->required();
  reduce->add_option("--range", o.range, "inputs A..B");
  reduce->add_option("--oracle", o.oracle, "oracle predicate or table file");
  reduce->add_option("--enum", o.enum_name, "double | xor1");
  reduce->add_option("--shift", o.shift, "many-one map x -> x + shift");
  reduce->add_option("--table", o.table, "truth table file");
  reduce->add_option("--p", o.p, "predicate decided by the pt reduction");
  fuel_flags(reduce);

  auto* pt = app.add_subcommand("pt", "dovetail two semi-deciders");
  pt->add_option("--range", o.range, "inputs A..B");
  auto* p_opt = pt->add_option("--p", o.p, "predicate with step-indexed semi-deciders");
  pt->add_option("--oracle", o.oracle, "oracle predicate or table file");
  fuel_flags(pt);

  auto* tt = app.add_subcommand("tt", "compare a truth-table reduction with direct evaluation");
  tt->add_option("--table", o.table, "truth table file")->required();
  tt->add_option("--range", o.range, "inputs A..B");
  tt->add_option("--oracle", o.oracle, "oracle predicate");
  fuel_flags(tt);

  auto* hyper = app.add_subcommand("demo-hypersimple", "reduce a range to its deficiency set");
  hyper->add_option("--enum", o.enum_name, "double | xor1");
  hyper->add_option("--range", o.range, "inputs A..B");
  fuel_flags(hyper);

  auto* self = app.add_subcommand("selftest", "run the randomised property suites");
  self->add_option("--seed", o.seed, "PRNG seed");
  self->add_option("--cases", o.cases, "random instances per suite");
  self->add_flag("--break-tt-indexing", o.break_tt, "evaluate truth tables little-endian");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(o);
    if (*reduce) return cmd_reduce(o);
    if (*pt) return cmd_pt(o, p_opt->count() > 0);
    if (*tt) return cmd_tt(o);
    if (*hyper) return cmd_hypersimple(o);
    return cmd_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
