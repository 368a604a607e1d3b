#include <functional>
#include <map>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "brace/algebra.hpp"

using namespace testutil;
using brace::apply_hom;
using brace::compare;
using brace::GeneralWord;
using brace::Homomorphism;
using brace::normalize;
using brace::product;
using brace::product_words;
using brace::TermBudget;

namespace {

brace::GeneralPtr gl(int id) { return GeneralWord::leaf({id}); }

Rational coeff_sum(const Polynomial& f) {
  Rational total = 0;
  for (const auto& [w, c] : f.terms()) total += c;
  return total;
}

}  // namespace

TEST_CASE("first defining relation: <a;<b;c>>") {
  auto a = L(0), b = L(1), c = L(2);
  Polynomial got = product_words(std::vector<WordPtr>{a}, W(2, {L(1)}));
  Polynomial expected;
  expected.add_term(W(2, {a, b}), 1);
  expected.add_term(W(2, {b, a}), 1);
  expected.add_term(W(2, {W(1, {a})}), 1);
  CHECK(got == expected);

  // the same relation through normalization of the raw word
  auto raw = GeneralWord::node({gl(0)}, GeneralWord::node({gl(1)}, gl(2)));
  CHECK(normalize(raw) == expected);
}

TEST_CASE("second defining relation: <a,b;<c;d>>") {
  auto a = L(0), b = L(1), c = L(2);
  Polynomial expected;
  expected.add_term(W(3, {a, b, c}), 1);
  expected.add_term(W(3, {a, W(2, {b})}), 1);
  expected.add_term(W(3, {W(2, {a, b})}), 1);
  expected.add_term(W(3, {a, c, b}), 1);
  expected.add_term(W(3, {W(2, {a}), b}), 1);
  expected.add_term(W(3, {c, a, b}), 1);

  Polynomial got = product_words(std::vector<WordPtr>{a, b}, W(3, {L(2)}));
  CHECK(got == expected);

  auto raw = GeneralWord::node({gl(0), gl(1)},
                               GeneralWord::node({gl(2)}, gl(3)));
  CHECK(normalize(raw) == expected);
}

TEST_CASE("letter target gives a single word") {
  auto v = W(0, {L(0)});
  Polynomial got = product_words(std::vector<WordPtr>{v}, L(1));
  REQUIRE(got.term_count() == 1);
  CHECK(brace::words_equal(got.leading_word(), W(1, {v})));
  CHECK(got.leading_coefficient() == 1);
}

TEST_CASE("empty argument list is rejected") {
  CHECK_THROWS_AS(product_words(std::vector<WordPtr>{}, L(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(product(std::vector<Polynomial>{}, Polynomial::letter({0})),
                  std::invalid_argument);
}

TEST_CASE("uncollected expansion size is a binomial split count") {
  // With letter arguments the coefficient sum counts the partitions.
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      std::vector<WordPtr> as, bs;
      for (int i = 0; i < m; ++i) as.push_back(L(i));
      for (int i = 0; i < n; ++i) bs.push_back(L(m + i));
      auto target = W(m + n, bs);
      Polynomial got = product_words(as, target);
      auto splits = oracle::count_splits(m, 2 * n + 1);
      CHECK(splits == oracle::binomial(m + 2 * n, 2 * n));
      CHECK(coeff_sum(got) == Rational(static_cast<long>(splits)));
    }
  }
}

TEST_CASE("brace compatibility on random word triples") {
  Rng rng(42);
  TermBudget budget(50'000'000);
  for (int trial = 0; trial < 40; ++trial) {
    int m = rng.range(1, 3), n = rng.range(1, 3);
    std::vector<WordPtr> as, bs;
    for (int i = 0; i < m; ++i)
      as.push_back(random_word(rng, 1, rng.range(1, 3)));
    for (int i = 0; i < n; ++i)
      bs.push_back(random_word(rng, 1, rng.range(1, 3)));
    WordPtr c = random_word(rng, 1, rng.range(1, 3));

    Polynomial inner = product_words(bs, c, budget);
    std::vector<Polynomial> as_polys;
    for (const auto& a : as) as_polys.push_back(P(a));
    Polynomial lhs = product(as_polys, inner, budget);
    CHECK(lhs == oracle::compatibility_rhs(as, bs, c));
  }
}

TEST_CASE("the induced binary product is left pre-Lie") {
  Rng rng(43);
  TermBudget budget(50'000'000);
  auto brk = [&](const Polynomial& u, const Polynomial& v) {
    return product(std::vector<Polynomial>{u}, v, budget);
  };
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_polynomial(rng, 2, 3, 2);
    Polynomial b = random_polynomial(rng, 2, 3, 2);
    Polynomial c = random_polynomial(rng, 2, 3, 2);
    Polynomial assoc_ab = brk(a, brk(b, c)) - brk(brk(a, b), c);
    Polynomial assoc_ba = brk(b, brk(a, c)) - brk(brk(b, a), c);
    CHECK(assoc_ab == assoc_ba);
  }
}

TEST_CASE("normalization has positive integer coefficients") {
  Rng rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    // random general word: binary nesting of random normal pieces
    auto g = GeneralWord::node(
        {GeneralWord::from_normal(random_word(rng, 2, rng.range(1, 2)))},
        GeneralWord::node(
            {GeneralWord::from_normal(random_word(rng, 2, rng.range(1, 2)))},
            GeneralWord::from_normal(random_word(rng, 2, rng.range(1, 3)))));
    Polynomial f = normalize(g);
    CHECK(!f.is_zero());
    for (const auto& [w, c] : f.terms()) {
      CHECK(c > 0);
      CHECK(c.get_den() == 1);
    }
  }
}

TEST_CASE("nested polynomial products reproduce the defining relation") {
  auto a = Polynomial::letter({0});
  auto b = Polynomial::letter({1});
  auto c = Polynomial::letter({2});
  Polynomial inner = product(std::vector<Polynomial>{b}, c);
  Polynomial outer = product(std::vector<Polynomial>{a}, inner);
  Polynomial expected;
  expected.add_term(W(2, {L(0), L(1)}), 1);
  expected.add_term(W(2, {L(1), L(0)}), 1);
  expected.add_term(W(2, {W(1, {L(0)})}), 1);
  CHECK(outer == expected);
}

TEST_CASE("multilinearity in every slot") {
  auto a = Polynomial::letter({0});
  auto b = Polynomial::letter({1});
  auto c = Polynomial::letter({2});
  // sum in an argument slot
  Polynomial lhs = product(std::vector<Polynomial>{a + b}, c);
  Polynomial rhs = product(std::vector<Polynomial>{a}, c) +
                   product(std::vector<Polynomial>{b}, c);
  CHECK(lhs == rhs);
  // scalar slot
  Polynomial target = normalize(
      GeneralWord::node({gl(1)}, gl(2)));
  Polynomial doubled = product(std::vector<Polynomial>{2 * a}, target);
  CHECK(doubled == 2 * product(std::vector<Polynomial>{a}, target));
}

TEST_CASE("leading term of a product multiplies leading terms") {
  Rng rng(45);
  TermBudget budget(50'000'000);
  for (int trial = 0; trial < 60; ++trial) {
    int m = rng.range(1, 3);
    std::vector<Polynomial> fs;
    std::vector<WordPtr> lead_words;
    for (int i = 0; i < m; ++i) {
      fs.push_back(random_polynomial(rng, 2, 3, 3));
      lead_words.push_back(fs.back().leading_word());
    }
    Polynomial g = random_polynomial(rng, 2, 3, 3);
    Polynomial whole = product(fs, g, budget);
    Polynomial of_leads = product_words(lead_words, g.leading_word(), budget);
    CHECK(brace::words_equal(whole.leading_word(), of_leads.leading_word()));
  }
}

TEST_CASE("breadth of a leading word adds the argument count") {
  Rng rng(46);
  for (int trial = 0; trial < 60; ++trial) {
    int m = rng.range(1, 3);
    std::vector<WordPtr> vs;
    for (int i = 0; i < m; ++i)
      vs.push_back(random_word(rng, 2, rng.range(1, 3)));
    WordPtr w = random_word(rng, 2, rng.range(1, 3));
    Polynomial p = product_words(vs, w);
    CHECK(p.leading_word()->breadth() == m + w->breadth());
  }
}

TEST_CASE("products are strictly monotone in each slot") {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    WordPtr w = random_word(rng, 2, rng.range(1, 3));
    WordPtr w2 = random_word(rng, 2, rng.range(1, 3));
    if (compare(w, w2) == 0) continue;
    if (compare(w, w2) < 0) std::swap(w, w2);
    int m = rng.range(1, 2);
    std::vector<WordPtr> vs;
    for (int i = 0; i < m; ++i)
      vs.push_back(random_word(rng, 2, rng.range(1, 2)));

    // target slot
    CHECK(compare(product_words(vs, w).leading_word(),
                  product_words(vs, w2).leading_word()) > 0);

    // argument slot
    WordPtr u = random_word(rng, 2, rng.range(1, 2));
    std::vector<WordPtr> args_hi = vs, args_lo = vs;
    int at = rng.below(static_cast<int>(vs.size()) + 1);
    args_hi.insert(args_hi.begin() + at, w);
    args_lo.insert(args_lo.begin() + at, w2);
    CHECK(compare(product_words(args_hi, u).leading_word(),
                  product_words(args_lo, u).leading_word()) > 0);
  }
}

TEST_CASE("argument tuples are recoverable from the leading word") {
  // exhaustive over one letter: every tuple of total degree <= 4
  std::vector<std::vector<WordPtr>> tuples;
  std::function<void(int, std::vector<WordPtr>&)> build =
      [&](int remaining, std::vector<WordPtr>& acc) {
        if (!acc.empty()) tuples.push_back(acc);
        for (int k = 1; k <= remaining; ++k) {
          for (const auto& w : brace::enumerate_normal(1, k)) {
            acc.push_back(w);
            build(remaining - k, acc);
            acc.pop_back();
          }
        }
      };
  std::vector<WordPtr> acc;
  build(4, acc);
  REQUIRE(tuples.size() == 22);

  for (int wd = 1; wd <= 3; ++wd) {
    for (const auto& w : brace::enumerate_normal(1, wd)) {
      std::map<WordPtr, const std::vector<WordPtr>*, brace::WordPtrLess> seen;
      for (const auto& tuple : tuples) {
        auto lead = product_words(tuple, w).leading_word();
        auto [it, inserted] = seen.emplace(lead, &tuple);
        CHECK(inserted);
      }
    }
  }
}

TEST_CASE("leading word interleaves arguments with target children") {
  Rng rng(48);
  for (int trial = 0; trial < 60; ++trial) {
    int m = rng.range(1, 3);
    std::vector<WordPtr> vs;
    for (int i = 0; i < m; ++i)
      vs.push_back(random_word(rng, 2, rng.range(1, 2)));
    WordPtr w = random_word(rng, 2, rng.range(2, 3));
    if (w->is_letter()) continue;
    auto lead = product_words(vs, w).leading_word();
    CHECK(lead->head() == w->head());
    CHECK(oracle::is_interleaving(lead->children(), w->children(), vs));
  }
}

TEST_CASE("homomorphisms substitute and re-expand") {
  auto x = L(0);
  Polynomial f_image = P(W(0, {x}));  // x -> <x;x> for the marker

  Homomorphism psi({Polynomial::letter({0}), f_image});
  // identity on plain letters
  Homomorphism ident = Homomorphism::identity(2);
  Polynomial mixed = P(W(1, {L(0)})) + 2 * Polynomial::letter({0});
  CHECK(apply_hom(ident, mixed) == mixed);

  // <y;x> with y -> <x;x> becomes <<x;x>;x>, no expansion
  CHECK(apply_hom(psi, P(W(0, {L(1)}))) == P(W(0, {W(0, {x})})));

  // <x;y> with y -> <x;x> expands through the first relation
  Polynomial expected;
  expected.add_term(W(0, {x, x}), 2);
  expected.add_term(W(0, {W(0, {x})}), 1);
  CHECK(apply_hom(psi, P(W(1, {L(0)}))) == expected);

  // missing image
  CHECK_THROWS_AS(apply_hom(Homomorphism::identity(1), P(W(1, {L(0)}))),
                  std::invalid_argument);
}

TEST_CASE("homomorphisms commute with the product") {
  Rng rng(49);
  TermBudget budget(50'000'000);
  for (int trial = 0; trial < 25; ++trial) {
    Homomorphism h({random_polynomial(rng, 2, 2, 2),
                    random_polynomial(rng, 2, 2, 2)});
    Polynomial a = random_polynomial(rng, 2, 2, 2);
    Polynomial g = random_polynomial(rng, 2, 2, 2);
    Polynomial lhs = apply_hom(h, product(std::vector<Polynomial>{a}, g, budget), budget);
    Polynomial rhs = product(std::vector<Polynomial>{apply_hom(h, a, budget)},
                             apply_hom(h, g, budget), budget);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("arithmetic plumbing stays canonical") {
  Rng rng(50);
  Polynomial f = random_polynomial(rng, 2, 3, 4);
  Polynomial g = random_polynomial(rng, 2, 3, 4);
  CHECK((f - f).is_zero());
  CHECK(1 * f == f);
  CHECK((f + g) - g == f);
  CHECK((f * Rational(0)).is_zero());
  Polynomial sum = f + (-f);
  CHECK(sum.term_count() == 0);
}

TEST_CASE("expansion respects the term budget") {
  TermBudget tiny(5);
  std::vector<WordPtr> as{L(0), L(0), L(0)};
  auto target = W(0, {L(0), L(0), L(0)});
  CHECK_THROWS_AS(product_words(as, target, tiny), brace::BudgetError);
  try {
    TermBudget tiny2(5);
    product_words(as, target, tiny2);
  } catch (const brace::BudgetError& e) {
    CHECK(e.limit() == 5);
    CHECK(e.used() > 5);
  }
}
