#include <doctest.h>

#include "oraclecomp/json_io.hpp"

using namespace oc;

TEST_CASE("run outcomes as JSON") {
  auto yes = total_oracle<Nat, bool>([](const Nat&) { return true; });
  Budget b{5, 100};
  auto j = outcome_json(delta(threshold_tree().at(3), yes, b), b);
  CHECK(j["result"] == "out");
  CHECK(j["value"] == true);
  CHECK(j["qs"] == nlohmann::ordered_json::array({0, 1, 2}));
  CHECK(j["budget"]["questions"] == 5);

  auto pending = outcome_json(delta(threshold_tree().at(3), yes, Budget{1, 100}), Budget{1, 100});
  CHECK(pending["result"] == "ask");
  CHECK(pending["value"] == 1);

  auto no = total_oracle<Nat, bool>([](const Nat&) { return false; });
  auto t = outcome_json(delta(threshold_tree().at(3), no, b), b);
  CHECK(t["result"] == "timeout");
  CHECK(t["value"].is_null());
}

TEST_CASE("transcripts as JSON") {
  Transcript<Nat, bool> t{{0}, {true}};
  auto j = transcript_json(t, std::optional<bool>{}, Verdict::valid);
  CHECK(j["out"].is_null());
  CHECK(j["verdict"] == "valid");
  CHECK(j.dump() == R"({"qs":[0],"ans":[true],"out":null,"verdict":"valid"})");
}
