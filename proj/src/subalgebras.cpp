#include "brace/subalgebras.hpp"

#include <stdexcept>

namespace brace {

namespace {

constexpr Letter kQLetter{0};

}  // namespace

std::optional<WordPtr> find_q_reducer(const Polynomial& target,
                                      const Polynomial& base,
                                      TermBudget& budget) {
  if (target.is_zero() || base.is_zero())
    throw std::invalid_argument("q-reducer search requires nonzero inputs");
  const int dt = target.degree();
  const int db = base.degree();
  if (dt % db != 0) return std::nullopt;
  const int k = dt / db;
  const WordPtr& target_lead = target.leading_word();
  const WordPtr& base_lead = base.leading_word();

  if (base_lead->is_letter()) {
    // Substituting a letter never expands, so the match is forced: the
    // target's leading word relabeled, provided it only uses that letter.
    if (!uses_only(*target_lead, base_lead->head())) return std::nullopt;
    return map_letters(target_lead, [](Letter) { return kQLetter; });
  }

  Polynomial lead_poly = Polynomial::from_word(base_lead);
  for (const auto& q : enumerate_normal(1, k, budget)) {
    Polynomial image = substitute_single(q, lead_poly, budget);
    if (words_equal(image.leading_word(), target_lead)) return q;
  }
  return std::nullopt;
}

std::optional<WordPtr> find_q_reducer(const Polynomial& target,
                                      const Polynomial& base) {
  TermBudget budget;
  return find_q_reducer(target, base, budget);
}

void apply_reduction_step(const ReductionStep& step, Polynomial& f1,
                          Polynomial& f2, TermBudget& budget) {
  Polynomial& which = step.which == PairSlot::first ? f1 : f2;
  const Polynomial& other = step.which == PairSlot::first ? f2 : f1;
  which.add_scaled(substitute_single(step.q, other, budget),
                   -step.coefficient);
}

PairReport reduce_pair(Polynomial f1, Polynomial f2, TermBudget& budget) {
  PairReport report;
  for (;;) {
    const bool z1 = f1.is_zero();
    const bool z2 = f2.is_zero();
    if (z1 && z2) {
      report.outcome = PairOutcome::zero_pair;
      break;
    }
    if (z1 || z2) {
      report.outcome = PairOutcome::free_rank1;
      break;
    }
    PairSlot order[2];
    if (compare(f1.leading_word(), f2.leading_word()) >= 0) {
      order[0] = PairSlot::first;
      order[1] = PairSlot::second;
    } else {
      order[0] = PairSlot::second;
      order[1] = PairSlot::first;
    }
    bool reduced = false;
    for (PairSlot slot : order) {
      Polynomial& target = slot == PairSlot::first ? f1 : f2;
      const Polynomial& base = slot == PairSlot::first ? f2 : f1;
      auto q = find_q_reducer(target, base, budget);
      if (!q) continue;
      Polynomial image = substitute_single(*q, base, budget);
      Rational alpha =
          target.leading_coefficient() / image.leading_coefficient();
      target.add_scaled(image, -alpha);
      report.steps.push_back({slot, alpha, *q});
      reduced = true;
      break;
    }
    if (!reduced) {
      report.outcome = PairOutcome::free_rank2;
      break;
    }
  }
  report.g1 = std::move(f1);
  report.g2 = std::move(f2);
  return report;
}

PairReport reduce_pair(Polynomial f1, Polynomial f2) {
  TermBudget budget;
  return reduce_pair(std::move(f1), std::move(f2), budget);
}

bool is_algebraically_independent(const Polynomial& f1, const Polynomial& f2,
                                  TermBudget& budget) {
  if (f1.is_zero() || f2.is_zero())
    throw std::invalid_argument("independence test requires nonzero inputs");
  return reduce_pair(f1, f2, budget).outcome == PairOutcome::free_rank2;
}

bool is_algebraically_independent(const Polynomial& f1, const Polynomial& f2) {
  TermBudget budget;
  return is_algebraically_independent(f1, f2, budget);
}

}  // namespace brace
