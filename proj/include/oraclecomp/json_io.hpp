#pragma once

// JSON encodings of transcripts and run outcomes.

#include <optional>

#include <json.hpp>

#include "oraclecomp/evaluator.hpp"
#include "oraclecomp/tree.hpp"

namespace oc {

// {"qs":[…],"ans":[…],"out":<value>|null,"verdict":"valid"|"invalid"|"unknown"}
template <class Q, class A, class O>
nlohmann::ordered_json transcript_json(const Transcript<Q, A>& t, const std::optional<O>& out,
                               Verdict verdict) {
  nlohmann::ordered_json j;
  j["qs"] = t.qs;
  j["ans"] = t.ans;
  j["out"] = out ? nlohmann::ordered_json(*out) : nlohmann::ordered_json(nullptr);
  j["verdict"] = to_string(verdict);
  return j;
}

// {"result":"out"|"ask"|"timeout","value":…,"qs":[…],"ans":[…],
//  "budget":{"questions":n,"steps":s}}
template <class Q, class A, class O>
nlohmann::ordered_json outcome_json(const RunOutcome<Q, A, O>& r, Budget budget) {
  nlohmann::ordered_json j;
  if (const auto* o = r.as_output()) {
    j["result"] = "out";
    j["value"] = o->value;
  } else if (const auto* q = r.as_question()) {
    j["result"] = "ask";
    j["value"] = q->question;
  } else {
    j["result"] = "timeout";
    j["value"] = nullptr;
  }
  j["qs"] = r.transcript().qs;
  j["ans"] = r.transcript().ans;
  j["budget"] = {{"questions", budget.question_fuel}, {"steps", budget.step_fuel}};
  return j;
}

}  // namespace oc
