#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "brace/words.hpp"

using namespace testutil;
using brace::compare;
using brace::enumerate_marked;
using brace::enumerate_normal;
using brace::GeneralWord;
using brace::letter_count;
using brace::WordPtrLess;

TEST_CASE("degree counts letter occurrences") {
  CHECK(L(0)->degree() == 1);
  CHECK(W(1, {L(0)})->degree() == 2);
  CHECK(W(0, {W(0, {L(0)}), L(1)})->degree() == 4);
}

TEST_CASE("breadth is one plus the child count") {
  CHECK(L(0)->breadth() == 1);
  CHECK(W(0, {L(0), L(0)})->breadth() == 3);
  CHECK(W(0, {W(0, {L(0)})})->breadth() == 2);
}

TEST_CASE("order compares degree, breadth, head, then rightmost child first") {
  // equal degree 3, breadth 3 vs 2
  CHECK(compare(W(0, {L(0), L(0)}), W(0, {W(0, {L(0)})})) > 0);
  // equal degree and breadth, heads x2 vs x1
  CHECK(compare(W(1, {L(0)}), W(0, {L(1)})) > 0);
  // u_1 is the rightmost child
  CHECK(compare(W(0, {L(0), L(1)}), W(0, {L(1), L(0)})) > 0);
  // degree first
  CHECK(compare(L(1), W(0, {L(0)})) < 0);
}

TEST_CASE("order is total on enumerated slices") {
  for (int d = 1; d <= 5; ++d) {
    auto words = enumerate_normal(2, d);
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(compare(words[i], words[i]) == 0);
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        auto ij = compare(words[i], words[j]);
        auto ji = compare(words[j], words[i]);
        CHECK(ij != 0);  // wt is injective
        CHECK((ij < 0) == (ji > 0));
      }
    }
  }
  // transitivity on sampled triples
  Rng rng(1);
  auto words = enumerate_normal(2, 4);
  for (int t = 0; t < 500; ++t) {
    auto a = words[rng.below(words.size())];
    auto b = words[rng.below(words.size())];
    auto c = words[rng.below(words.size())];
    if (compare(a, b) <= 0 && compare(b, c) <= 0) CHECK(compare(a, c) <= 0);
  }
}

TEST_CASE("enumeration of one-letter words follows the Catalan numbers") {
  const std::size_t expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (int d = 1; d <= 7; ++d)
    CHECK(enumerate_normal(1, d).size() == expected[d - 1]);
  // M letters scale by M^d
  for (int d = 1; d <= 5; ++d)
    CHECK(enumerate_normal(2, d).size() == (1u << d) * expected[d - 1]);
  CHECK(enumerate_normal(3, 3).size() == 27 * 2);
}

TEST_CASE("enumeration is ascending, duplicate-free, and matches brute force") {
  for (int letters = 1; letters <= 2; ++letters) {
    for (int d = 1; d <= 5; ++d) {
      auto words = enumerate_normal(letters, d);
      for (std::size_t i = 0; i + 1 < words.size(); ++i)
        CHECK(compare(words[i], words[i + 1]) < 0);
      auto brute = oracle::brute_trees(letters, d);
      REQUIRE(brute.size() == words.size());
      std::sort(brute.begin(), brute.end(), WordPtrLess{});
      for (std::size_t i = 0; i < words.size(); ++i)
        CHECK(brace::words_equal(words[i], brute[i]));
    }
  }
}

TEST_CASE("the two one-letter words of degree three, in order") {
  auto words = enumerate_normal(1, 3);
  REQUIRE(words.size() == 2);
  CHECK(brace::words_equal(words[0], W(0, {W(0, {L(0)})})));  // <<x;x>;x>
  CHECK(brace::words_equal(words[1], W(0, {L(0), L(0)})));    // <x,x;x>
}

TEST_CASE("degree-one slice and degree zero edge cases") {
  auto single = enumerate_normal(1, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0]->is_letter());
  CHECK_THROWS_AS(enumerate_normal(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_normal(0, 2), std::invalid_argument);
}

TEST_CASE("marked enumeration places exactly one marker") {
  auto d1 = enumerate_marked(1, 1, 1);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0]->head().id == 1);  // the marker over one base letter

  auto d2 = enumerate_marked(1, 2, 1);
  REQUIRE(d2.size() == 2);
  CHECK(brace::words_equal(d2[0], W(0, {L(1)})));  // <y;x>
  CHECK(brace::words_equal(d2[1], W(1, {L(0)})));  // <x;y>

  // Counts agree with filtering the full enumeration by marker count.
  for (int d = 1; d <= 5; ++d) {
    auto marked = enumerate_marked(1, d, 1);
    std::size_t filtered = 0;
    for (const auto& w : oracle::brute_trees(2, d))
      if (letter_count(*w, {1}) == 1) ++filtered;
    CHECK(marked.size() == filtered);
    for (const auto& w : marked) CHECK(letter_count(*w, {1}) == 1);
  }
  CHECK(enumerate_marked(1, 3, 1).size() == 6);
}

TEST_CASE("general words normalize structurally when already normal") {
  auto g = GeneralWord::node({GeneralWord::leaf({0})}, GeneralWord::leaf({1}));
  CHECK(g->is_normal());
  CHECK(brace::words_equal(g->to_normal(), W(1, {L(0)})));

  auto nested = GeneralWord::node(
      {GeneralWord::leaf({0})},
      GeneralWord::node({GeneralWord::leaf({0})}, GeneralWord::leaf({1})));
  CHECK(!nested->is_normal());
  CHECK(nested->degree() == 3);
}

TEST_CASE("letter helpers") {
  auto w = W(0, {W(1, {L(0)}), L(0)});
  CHECK(letter_count(*w, {0}) == 3);
  CHECK(letter_count(*w, {1}) == 1);
  CHECK(brace::mentions(*w, {1}));
  CHECK(!brace::mentions(*w, {2}));
  CHECK(!brace::uses_only(*w, {0}));
  CHECK(brace::uses_only(*W(0, {L(0)}), {0}));
  auto relabeled = brace::map_letters(w, [](brace::Letter) {
    return brace::Letter{7};
  });
  CHECK(letter_count(*relabeled, {7}) == 4);
}
