#include <doctest.h>

#include <optional>

#include "oraclecomp/checks/suites.hpp"
#include "oraclecomp/partial.hpp"

using namespace oc;

TEST_CASE("ret is present at every fuel") {
  CHECK(ret(Nat{5}).eval(0) == std::optional<Nat>(5));
  for (Fuel n : {0, 1, 7, 1000}) CHECK(ret(star).eval(n).has_value());
}

TEST_CASE("bind sequences and propagates divergence") {
  auto three = bind(ret(Nat{2}), [](const Nat& v) { return ret(v + 1); });
  CHECK(three.eval(0) == std::optional<Nat>(3));
  auto never = bind(undef<Nat>(), [](const Nat& v) { return ret(v); });
  for (Fuel n = 0; n < 100; ++n) CHECK_FALSE(never.eval(n));
  CHECK(never.trivially_undefined());
}

TEST_CASE("bind charges both costs") {
  auto slow = mu([](Nat n) { return ret(n == 3); });  // cost 4
  auto twice = slow.bind([slow](const Nat& a) { return slow.map([a](const Nat& b) { return a + b; }); });
  CHECK_FALSE(twice.eval(7));
  CHECK(twice.eval(8) == std::optional<Nat>(6));
  CHECK(twice.probe(100)->cost == 8);
}

TEST_CASE("mu finds the least true index") {
  auto m = mu([](Nat n) { return ret(n == 3); });
  CHECK_FALSE(m.eval(3));
  CHECK(m.eval(4) == std::optional<Nat>(3));
  CHECK(m.eval(500) == std::optional<Nat>(3));
}

TEST_CASE("mu over an always-false predicate diverges") {
  auto m = mu([](Nat) { return ret(false); });
  for (Fuel n = 0; n <= 300; ++n) CHECK_FALSE(m.eval(n));
}

TEST_CASE("mu needs every earlier index to be false") {
  auto m = mu([](Nat n) { return n == 0 ? undef<bool>() : ret(true); });
  bool seen = false;
  for (Fuel n = 0; n <= 10000; ++n) seen = seen || m.eval(n).has_value();
  CHECK_FALSE(seen);
}

TEST_CASE("mu agrees with a direct search over every boolean table") {
  // Entries 0 false, 1 true, 2 undefined; nine indices.
  for (unsigned code = 0; code < 19683; code += 7) {
    unsigned c = code;
    std::vector<int> cells(9);
    for (int& v : cells) {
      v = static_cast<int>(c % 3);
      c /= 3;
    }
    std::optional<Nat> expected;
    for (Nat k = 0; k < 9 && cells[k] != 2; ++k) {
      if (cells[k] == 1) {
        expected = k;
        break;
      }
    }
    auto m = mu([cells](Nat n) -> Partial<bool> {
      if (n >= cells.size()) return ret(false);
      if (cells[n] == 2) return undef<bool>();
      return ret(cells[n] == 1);
    });
    CHECK(m.eval(64) == expected);
    if (expected) {
      CHECK_FALSE(m.eval(*expected));
      CHECK(m.eval(*expected + 1) == expected);
    }
  }
}

TEST_CASE("monotone and determinate on random expressions") {
  auto r = checks::partiality_laws({7, 300});
  INFO(r.counterexample);
  CHECK(r.passed);
  CHECK(r.cases == 300);
}
