#pragma once

#include <span>
#include <vector>

#include "brace/budget.hpp"
#include "brace/polynomial.hpp"
#include "brace/words.hpp"

namespace brace {

// Normal-form expansion of <v_m,...,v_1;w> for normal words v_i and target w,
// args given in display order. For a letter target the result is the single
// word <v_m,...,v_1;x>. Otherwise the argument sequence is split into
// 2n+1 consecutive, possibly empty blocks around the n children of the
// target, with each nonempty odd block expanded recursively; the empty-block
// convention <;u> = u never constructs a 0-ary node. Rejects empty args.
Polynomial product_words(std::span<const WordPtr> args, const WordPtr& target,
                         TermBudget& budget);
Polynomial product_words(std::span<const WordPtr> args, const WordPtr& target);

// Multilinear extension of product_words to polynomial slots.
Polynomial product(std::span<const Polynomial> args, const Polynomial& target,
                   TermBudget& budget);
Polynomial product(std::span<const Polynomial> args, const Polynomial& target);

// Unique presentation of an arbitrary brace word in the normal-word basis.
// Coefficients are always positive integers.
Polynomial normalize(const GeneralPtr& w, TermBudget& budget);
Polynomial normalize(const GeneralPtr& w);

// A brace-algebra homomorphism determined by generator images, indexed by
// letter id. Application replaces leaves bottom-up and re-normalizes through
// product; it commutes with the brace product.
class Homomorphism {
 public:
  explicit Homomorphism(std::vector<Polynomial> images)
      : images_(std::move(images)) {}
  static Homomorphism identity(int letters);

  int source_letters() const { return static_cast<int>(images_.size()); }
  const Polynomial& image(Letter x) const;

 private:
  std::vector<Polynomial> images_;
};

Polynomial apply_hom(const Homomorphism& h, const Polynomial& f,
                     TermBudget& budget);
Polynomial apply_hom(const Homomorphism& h, const Polynomial& f);

// q(value) for a one-letter word q: substitutes `value` for the only letter
// of q and expands. q must use exactly the letter with index 0.
Polynomial substitute_single(const WordPtr& q, const Polynomial& value,
                             TermBudget& budget);

}  // namespace brace
