#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "brace/algebra.hpp"
#include "brace/polynomial.hpp"

namespace brace {

enum class PairSlot { first, second };

// One elementary substitution on a generating pair: the chosen generator is
// replaced by itself minus coefficient * q(other), where q is a one-letter
// normal word. The coefficient is chosen so the leading words cancel, so the
// replaced generator's leading word strictly drops. Invertible by adding the
// same multiple back.
struct ReductionStep {
  PairSlot which;
  Rational coefficient;
  WordPtr q;  // over the single letter with index 0
};

enum class PairOutcome { free_rank2, free_rank1, zero_pair };

// Result of reducing a generating pair: the recorded steps map the input
// pair exactly onto (g1, g2). free_rank1 leaves the surviving generator in
// whichever slot it ended in; the other slot is zero.
struct PairReport {
  std::vector<ReductionStep> steps;
  PairOutcome outcome = PairOutcome::free_rank2;
  Polynomial g1, g2;
};

// Searches for a one-letter normal word q with the leading word of q(base)
// equal to the leading word of target. The degree constraint
// deg(target) = k * deg(base) prunes the search to the Catalan-many one-letter
// words of degree k; candidate leading words are computed by substituting
// only the leading word of base. Returns the first match in enumeration
// order, or nothing.
std::optional<WordPtr> find_q_reducer(const Polynomial& target,
                                      const Polynomial& base,
                                      TermBudget& budget);
std::optional<WordPtr> find_q_reducer(const Polynomial& target,
                                      const Polynomial& base);

// Repeatedly eliminates leading words between the two generators until no
// q-reducer exists in either direction. The generator with the larger
// leading word is reduced first; at equal leading words the first is.
PairReport reduce_pair(Polynomial f1, Polynomial f2, TermBudget& budget);
PairReport reduce_pair(Polynomial f1, Polynomial f2);

// Applies one recorded step to a pair, reproducing the reduction exactly.
void apply_reduction_step(const ReductionStep& step, Polynomial& f1,
                          Polynomial& f2, TermBudget& budget);

// Nonzero f1, f2 are algebraically independent exactly when reduction ends
// with both generators surviving.
bool is_algebraically_independent(const Polynomial& f1, const Polynomial& f2,
                                  TermBudget& budget);
bool is_algebraically_independent(const Polynomial& f1, const Polynomial& f2);

}  // namespace brace
