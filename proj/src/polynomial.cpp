#include "brace/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace brace {

Polynomial Polynomial::from_word(WordPtr w, Rational coeff) {
  Polynomial p;
  p.add_term(w, coeff);
  return p;
}

std::pair<WordPtr, Rational> Polynomial::leading() const {
  if (terms_.empty())
    throw std::invalid_argument("leading term of the zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

const WordPtr& Polynomial::leading_word() const {
  if (terms_.empty())
    throw std::invalid_argument("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty())
    throw std::invalid_argument("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

int Polynomial::degree() const { return leading_word()->degree(); }

void Polynomial::add_term(const WordPtr& w, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Polynomial& p, const Rational& coeff) {
  if (coeff == 0) return;
  for (const auto& [w, c] : p.terms_) add_term(w, c * coeff);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

Polynomial Polynomial::operator/(const Rational& c) const {
  if (c == 0) throw std::invalid_argument("division by zero");
  Polynomial out = *this;
  for (auto& [w, v] : out.terms_) v /= c;
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (!words_equal(a->first, b->first) || a->second != b->second)
      return false;
  }
  return true;
}

bool mentions(const Polynomial& f, Letter x) {
  return std::any_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return mentions(*t.first, x); });
}

bool uses_only(const Polynomial& f, Letter x) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return uses_only(*t.first, x); });
}

namespace {
int max_letter_in(const NormalWord& w) {
  int m = w.head().id;
  for (const auto& c : w.children()) m = std::max(m, max_letter_in(*c));
  return m;
}
}  // namespace

int max_letter(const Polynomial& f) {
  int m = -1;
  for (const auto& [w, c] : f.terms()) m = std::max(m, max_letter_in(*w));
  return m;
}

}  // namespace brace
