#pragma once

#include <map>
#include <utility>

#include "brace/rational.hpp"
#include "brace/words.hpp"

namespace brace {

// An element of the free brace algebra: a finite map from normal words to
// nonzero rational coefficients. Canonical by construction (no zero values
// stored), so map equality is equality in the algebra. Terms are kept ordered
// under compare; the leading term sits at the maximal key.
class Polynomial {
 public:
  using TermMap = std::map<WordPtr, Rational, WordPtrLess>;

  Polynomial() = default;  // zero

  static Polynomial from_word(WordPtr w, Rational coeff = 1);
  static Polynomial letter(Letter x) { return from_word(NormalWord::leaf(x)); }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  // Compare-maximal term and its coefficient. Rejects the zero polynomial.
  std::pair<WordPtr, Rational> leading() const;
  const WordPtr& leading_word() const;
  const Rational& leading_coefficient() const;

  // Degree of the leading term. Rejects the zero polynomial.
  int degree() const;

  // Adds coeff * w, dropping the term if the sum cancels.
  void add_term(const WordPtr& w, const Rational& coeff);
  // this += coeff * p
  void add_scaled(const Polynomial& p, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(Polynomial p, const Rational& c) {
    p *= c;
    return p;
  }
  friend Polynomial operator*(const Rational& c, Polynomial p) {
    p *= c;
    return p;
  }
  Polynomial operator-() const;
  Polynomial operator/(const Rational& c) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

 private:
  TermMap terms_;
};

bool mentions(const Polynomial& f, Letter x);
bool uses_only(const Polynomial& f, Letter x);

// Largest letter index occurring in f, or -1 for the zero polynomial.
int max_letter(const Polynomial& f);

}  // namespace brace
