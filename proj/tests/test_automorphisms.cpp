#include <vector>

#include "doctest.h"
#include "helpers.hpp"

#include "brace/automorphisms.hpp"

using namespace testutil;
using brace::apply_elementary;
using brace::compose;
using brace::decompose_tame;
using brace::ElementaryAuto;
using brace::Endo2;
using brace::random_tame;
using brace::replay;
using brace::TermBudget;

namespace {

Polynomial xx() { return P(W(0, {L(0)})); }  // <x1;x1>

}  // namespace

TEST_CASE("elementary transformations act on one component") {
  TermBudget budget;
  ElementaryAuto e(2, 1, xx());  // x2 -> x2 + <x1;x1>
  Endo2 phi = apply_elementary(e, Endo2::identity(), budget);
  CHECK(phi.f1 == Polynomial::letter({0}));
  CHECK(phi.f2 == Polynomial::letter({1}) + xx());

  ElementaryAuto noop(1, 1, Polynomial());
  CHECK(apply_elementary(noop, phi, budget) == phi);

  Endo2 back = apply_elementary(e.inverse(), phi, budget);
  CHECK(back == Endo2::identity());

  CHECK_THROWS_AS(ElementaryAuto(1, 0, Polynomial()), std::invalid_argument);
  CHECK_THROWS_AS(ElementaryAuto(2, 1, Polynomial::letter({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(ElementaryAuto(3, 1, Polynomial()), std::invalid_argument);
}

TEST_CASE("elementary inverses cancel in sequence") {
  TermBudget budget(10'000'000);
  Rng rng(56);
  for (int trial = 0; trial < 20; ++trial) {
    auto [phi, factors] = random_tame(rng.raw(), rng.range(1, 3), 2, budget);
    Endo2 undone = phi;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      undone = apply_elementary(it->inverse(), undone, budget);
    CHECK(undone == Endo2::identity());
  }
}

TEST_CASE("composition against the identity") {
  TermBudget budget;
  Endo2 phi{Polynomial::letter({0}) + xx(), Polynomial::letter({1})};
  CHECK(compose(phi, Endo2::identity(), budget) == phi);
  CHECK(compose(Endo2::identity(), phi, budget) == phi);
}

TEST_CASE("decomposition of a single nonlinear shift") {
  TermBudget budget(10'000'000);
  Endo2 phi{Polynomial::letter({0}), Polynomial::letter({1}) + xx()};
  auto factors = decompose_tame(phi, budget);
  REQUIRE(factors.has_value());
  REQUIRE(factors->size() == 1);
  CHECK((*factors)[0].index() == 2);
  CHECK((*factors)[0].scalar() == 1);
  CHECK((*factors)[0].shift() == xx());
  CHECK(replay(*factors, budget) == phi);
}

TEST_CASE("decomposition of the swap needs the linear endgame") {
  TermBudget budget(10'000'000);
  Endo2 swap{Polynomial::letter({1}), Polynomial::letter({0})};
  auto factors = decompose_tame(swap, budget);
  REQUIRE(factors.has_value());
  CHECK(factors->size() == 4);  // three transvections and a scaling
  CHECK(replay(*factors, budget) == swap);
}

TEST_CASE("non-automorphisms are rejected") {
  TermBudget budget(10'000'000);
  // (x1, <x1;x1>): reduction zeroes the second generator
  CHECK(!decompose_tame({Polynomial::letter({0}), xx()}, budget).has_value());
  // (x1, x1): dependent linear pair
  CHECK(!decompose_tame({Polynomial::letter({0}), Polynomial::letter({0})},
                        budget)
             .has_value());
  // (x1, <x2;x2>): rank-two but not generating
  CHECK(!decompose_tame({Polynomial::letter({0}), P(W(1, {L(1)}))}, budget)
             .has_value());
  // zero component
  CHECK(!decompose_tame({Polynomial::letter({0}), Polynomial()}, budget)
             .has_value());
}

TEST_CASE("random tame endomorphisms round-trip exactly") {
  TermBudget budget(200'000'000);
  Rng rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    int steps = rng.range(0, 4);
    auto [phi, truth] = random_tame(rng.raw(), steps, 3, budget);
    CHECK(replay(truth, budget) == phi);
    auto factors = decompose_tame(phi, budget);
    REQUIRE(factors.has_value());
    CHECK(replay(*factors, budget) == phi);
  }
}

TEST_CASE("binary composition of factors matches replay") {
  TermBudget budget(50'000'000);
  Rng rng(58);
  for (int trial = 0; trial < 10; ++trial) {
    auto [phi, factors] = random_tame(rng.raw(), rng.range(1, 3), 2, budget);
    Endo2 composed = Endo2::identity();
    for (const auto& e : factors)
      composed = compose(composed, apply_elementary(e, Endo2::identity(), budget),
                         budget);
    CHECK(composed == phi);
  }
}

TEST_CASE("zero steps build the identity") {
  TermBudget budget;
  auto [phi, factors] = random_tame(99, 0, 3, budget);
  CHECK(phi == Endo2::identity());
  CHECK(factors.empty());
}
