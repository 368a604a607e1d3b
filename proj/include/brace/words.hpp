#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <vector>

#include "brace/budget.hpp"

namespace brace {

// A generator symbol. Letters are dense 0-based indices into an alphabet of
// size M, totally ordered by index. When a marker letter is in play it sits
// at index M, above every base letter.
struct Letter {
  int id = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class NormalWord;
using WordPtr = std::shared_ptr<const NormalWord>;

// A normal brace word <u_n,...,u_1;x>: a head letter plus an ordered sequence
// of normal-word children. Children are stored in display order, so
// children().front() is u_n (leftmost) and children().back() is u_1
// (rightmost). A bare letter has no children. Immutable; degree is cached.
class NormalWord {
 public:
  static WordPtr leaf(Letter x);
  static WordPtr make(Letter head, std::vector<WordPtr> children);

  Letter head() const { return head_; }
  const std::vector<WordPtr>& children() const { return children_; }
  bool is_letter() const { return children_.empty(); }

  int degree() const { return degree_; }
  int breadth() const { return static_cast<int>(children_.size()) + 1; }

 private:
  NormalWord(Letter head, std::vector<WordPtr> children, int degree)
      : head_(head), children_(std::move(children)), degree_(degree) {}

  Letter head_;
  std::vector<WordPtr> children_;
  int degree_;
};

// Degree-breadth-inverse-lexicographic order: compares degree, then breadth,
// then head letter, then children starting from the rightmost (u_1 first).
// Total; EQ exactly on structural equality.
std::strong_ordering compare(const NormalWord& a, const NormalWord& b);

inline std::strong_ordering compare(const WordPtr& a, const WordPtr& b) {
  return compare(*a, *b);
}

inline bool words_equal(const WordPtr& a, const WordPtr& b) {
  return compare(*a, *b) == std::strong_ordering::equal;
}

// Strict-less functor for containers keyed by words.
struct WordPtrLess {
  bool operator()(const WordPtr& a, const WordPtr& b) const {
    return compare(*a, *b) < 0;
  }
};

int letter_count(const NormalWord& w, Letter x);
bool mentions(const NormalWord& w, Letter x);
bool uses_only(const NormalWord& w, Letter x);

// Rebuilds w with every letter replaced through f. The result is again a
// normal word (letters map to letters).
WordPtr map_letters(const WordPtr& w, const std::function<Letter(Letter)>& f);

// An arbitrary brace word: a leaf letter, or <args;target> where the target
// may itself be any word. Parser output; input to normalization.
class GeneralWord;
using GeneralPtr = std::shared_ptr<const GeneralWord>;

class GeneralWord {
 public:
  static GeneralPtr leaf(Letter x);
  // args in display order, length >= 1.
  static GeneralPtr node(std::vector<GeneralPtr> args, GeneralPtr target);
  static GeneralPtr from_normal(const WordPtr& w);

  bool is_leaf() const { return !target_; }
  Letter letter() const { return letter_; }
  const std::vector<GeneralPtr>& args() const { return args_; }
  const GeneralPtr& target() const { return target_; }

  int degree() const { return degree_; }

  // True when every target at every level is a letter.
  bool is_normal() const;
  WordPtr to_normal() const;  // requires is_normal()

 private:
  GeneralWord(Letter x) : letter_(x), degree_(1) {}
  GeneralWord(std::vector<GeneralPtr> args, GeneralPtr target, int degree)
      : args_(std::move(args)), target_(std::move(target)), degree_(degree) {}

  Letter letter_{};            // valid iff leaf
  std::vector<GeneralPtr> args_;
  GeneralPtr target_;          // null iff leaf
  int degree_;
};

// All normal words of exactly the given degree over `letters` base letters,
// ascending under compare, no duplicates. degree must be >= 1.
std::vector<WordPtr> enumerate_normal(int letters, int degree);
std::vector<WordPtr> enumerate_normal(int letters, int degree,
                                      TermBudget& budget);

// Normal words over the extended alphabet (base letters plus the marker at
// index `letters`) containing exactly `marked` occurrences of the marker.
std::vector<WordPtr> enumerate_marked(int letters, int degree, int marked);
std::vector<WordPtr> enumerate_marked(int letters, int degree, int marked,
                                      TermBudget& budget);

}  // namespace brace
