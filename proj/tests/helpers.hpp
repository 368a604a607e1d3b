#pragma once

#include <map>
#include <random>
#include <vector>

#include "brace/algebra.hpp"
#include "brace/polynomial.hpp"
#include "brace/words.hpp"

namespace testutil {

using brace::Letter;
using brace::NormalWord;
using brace::Polynomial;
using brace::Rational;
using brace::WordPtr;

inline WordPtr L(int id) { return NormalWord::leaf(Letter{id}); }

inline WordPtr W(int head, std::vector<WordPtr> kids) {
  return NormalWord::make(Letter{head}, std::move(kids));
}

inline Polynomial P(const WordPtr& w, Rational c = 1) {
  return Polynomial::from_word(w, std::move(c));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int below(int n) { return static_cast<int>(gen_() % n); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  std::uint64_t raw() { return gen_(); }

  Rational coefficient() {
    int num = 0;
    while (num == 0) num = range(-5, 5);
    return brace::make_rational(num, range(1, 4));
  }

 private:
  std::mt19937_64 gen_;
};

// Uniform over the enumerated slice of the given degree.
inline WordPtr random_word(Rng& rng, int letters, int degree) {
  static std::map<std::pair<int, int>, std::vector<WordPtr>> slices;
  auto key = std::make_pair(letters, degree);
  auto it = slices.find(key);
  if (it == slices.end())
    it = slices.emplace(key, brace::enumerate_normal(letters, degree)).first;
  const auto& slice = it->second;
  return slice[rng.below(static_cast<int>(slice.size()))];
}

inline Polynomial random_polynomial(Rng& rng, int letters, int max_degree,
                                    int max_terms) {
  for (;;) {
    Polynomial f;
    int terms = rng.range(1, max_terms);
    for (int i = 0; i < terms; ++i)
      f.add_term(random_word(rng, letters, rng.range(1, max_degree)),
                 rng.coefficient());
    if (!f.is_zero()) return f;
  }
}

}  // namespace testutil
