#include "oraclecomp/truthtable.hpp"

#include <stdexcept>
#include <string>

namespace oc {

bool tt_eval(const std::vector<bool>& answers, const std::vector<bool>& table,
             TableIndexing indexing) {
  if (answers.size() >= 64 || table.size() != (std::size_t{1} << answers.size())) {
    throw std::invalid_argument("truth table has " + std::to_string(table.size()) +
                                " rows for " + std::to_string(answers.size()) + " answers");
  }
  std::size_t index = 0;
  const std::size_t k = answers.size();
  for (std::size_t j = 0; j < k; ++j) {
    if (!answers[j]) continue;
    const std::size_t bit = indexing == TableIndexing::big_endian ? k - 1 - j : j;
    index |= std::size_t{1} << bit;
  }
  return table[index];
}

Enumerator doubling_enumerator() {
  return {"double", [](Nat n) { return 2 * n; }};
}

Enumerator xor1_enumerator() {
  return {"xor1", [](Nat n) { return n ^ 1u; }};
}

Deficiency deficiency(const Enumerator& e, Nat x, Nat bound) {
  const Nat ex = e(x);
  for (Nat x0 = x + 1; x0 <= bound; ++x0) {
    if (e(x0) < ex) return Deficiency::deficient;
  }
  return Deficiency::not_found_up_to_bound;
}

bool window_membership(const Enumerator& e, Nat z, Nat x) {
  for (Nat n = 0; n <= x + 1; ++n) {
    if (e(n) == z) return true;
  }
  return false;
}

TuringReduction<Nat, Nat> deficiency_reduction(const Enumerator& e) {
  return {Tree<Nat, Nat, bool, bool>(
      [e](const Nat& z, const std::vector<bool>& ans) -> Partial<Node<Nat, bool>> {
        for (Nat x = 0; x < ans.size(); ++x) {
          if (!ans[x] && e(x) > z) return out<Nat, bool>(window_membership(e, z, x));
        }
        return ask<Nat, bool>(Nat{ans.size()});
      })};
}

}  // namespace oc
