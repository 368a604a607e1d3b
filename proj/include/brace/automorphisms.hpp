#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "brace/algebra.hpp"
#include "brace/polynomial.hpp"

namespace brace {

// An elementary transformation of Br(x1,x2): the indexed generator maps to
// scalar * itself plus a polynomial in the other generator only; the other
// generator is fixed. scalar must be nonzero, so every elementary is
// invertible.
class ElementaryAuto {
 public:
  ElementaryAuto(int index, Rational scalar, Polynomial shift);

  int index() const { return index_; }          // 1 or 2
  const Rational& scalar() const { return scalar_; }
  const Polynomial& shift() const { return shift_; }

  ElementaryAuto inverse() const;

 private:
  int index_;
  Rational scalar_;
  Polynomial shift_;
};

// An endomorphism of Br(x1,x2) given by the images of the two generators.
struct Endo2 {
  Polynomial f1, f2;

  static Endo2 identity();
  bool operator==(const Endo2& rhs) const {
    return f1 == rhs.f1 && f2 == rhs.f2;
  }
};

// Replaces the indexed component by scalar * component + shift evaluated at
// the current pair; right-composition with the elementary map.
Endo2 apply_elementary(const ElementaryAuto& e, const Endo2& phi,
                       TermBudget& budget);

// outer after inner: each generator image of inner pushed through outer.
Endo2 compose(const Endo2& outer, const Endo2& inner, TermBudget& budget);

// Applies factors left to right starting from the identity; the composition
// convention used for decompositions and for random_tame ground truth.
Endo2 replay(std::span<const ElementaryAuto> factors, TermBudget& budget);

// Factors phi into elementary transformations when it is an automorphism:
// pair reduction eliminates nonlinear leading words, then 2x2 Gaussian
// elimination finishes the linear part (a swap costs three transvections and
// a scaling). Returns the factor list whose replay equals phi, or nullopt
// when the terminal pair is not linear invertible.
std::optional<std::vector<ElementaryAuto>> decompose_tame(const Endo2& phi,
                                                          TermBudget& budget);
std::optional<std::vector<ElementaryAuto>> decompose_tame(const Endo2& phi);

// Seeded composition of `steps` random elementary transformations with shift
// degree at most max_shift_degree. Returns the endomorphism together with
// the ground-truth factor list (replay of the list equals the endomorphism).
// Deterministic in the seed; no global RNG state.
std::pair<Endo2, std::vector<ElementaryAuto>> random_tame(std::uint64_t seed,
                                                          int steps,
                                                          int max_shift_degree,
                                                          TermBudget& budget);

}  // namespace brace
