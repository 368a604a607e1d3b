#include "brace/words.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace brace {

WordPtr NormalWord::leaf(Letter x) {
  return WordPtr(new NormalWord(x, {}, 1));
}

WordPtr NormalWord::make(Letter head, std::vector<WordPtr> children) {
  int degree = 1;
  for (const auto& c : children) {
    if (!c) throw std::invalid_argument("normal word: null child");
    degree += c->degree();
  }
  return WordPtr(new NormalWord(head, std::move(children), degree));
}

std::strong_ordering compare(const NormalWord& a, const NormalWord& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.breadth() <=> b.breadth(); c != 0) return c;
  if (auto c = a.head() <=> b.head(); c != 0) return c;
  // Equal breadth means equal child counts; u_1 is the rightmost child.
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 1; i <= ca.size(); ++i) {
    if (auto c = compare(*ca[ca.size() - i], *cb[cb.size() - i]); c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

int letter_count(const NormalWord& w, Letter x) {
  int n = w.head() == x ? 1 : 0;
  for (const auto& c : w.children()) n += letter_count(*c, x);
  return n;
}

bool mentions(const NormalWord& w, Letter x) {
  if (w.head() == x) return true;
  for (const auto& c : w.children())
    if (mentions(*c, x)) return true;
  return false;
}

bool uses_only(const NormalWord& w, Letter x) {
  if (w.head() != x) return false;
  for (const auto& c : w.children())
    if (!uses_only(*c, x)) return false;
  return true;
}

WordPtr map_letters(const WordPtr& w, const std::function<Letter(Letter)>& f) {
  if (w->is_letter()) return NormalWord::leaf(f(w->head()));
  std::vector<WordPtr> kids;
  kids.reserve(w->children().size());
  for (const auto& c : w->children()) kids.push_back(map_letters(c, f));
  return NormalWord::make(f(w->head()), std::move(kids));
}

GeneralPtr GeneralWord::leaf(Letter x) {
  return GeneralPtr(new GeneralWord(x));
}

GeneralPtr GeneralWord::node(std::vector<GeneralPtr> args, GeneralPtr target) {
  if (args.empty())
    throw std::invalid_argument("general word: empty argument list");
  if (!target) throw std::invalid_argument("general word: null target");
  int degree = target->degree();
  for (const auto& a : args) {
    if (!a) throw std::invalid_argument("general word: null argument");
    degree += a->degree();
  }
  return GeneralPtr(new GeneralWord(std::move(args), std::move(target), degree));
}

GeneralPtr GeneralWord::from_normal(const WordPtr& w) {
  if (w->is_letter()) return leaf(w->head());
  std::vector<GeneralPtr> args;
  args.reserve(w->children().size());
  for (const auto& c : w->children()) args.push_back(from_normal(c));
  return node(std::move(args), leaf(w->head()));
}

bool GeneralWord::is_normal() const {
  if (is_leaf()) return true;
  if (!target_->is_leaf()) return false;
  for (const auto& a : args_)
    if (!a->is_normal()) return false;
  return true;
}

WordPtr GeneralWord::to_normal() const {
  if (is_leaf()) return NormalWord::leaf(letter_);
  if (!target_->is_leaf())
    throw std::invalid_argument("word is not in normal form");
  std::vector<WordPtr> kids;
  kids.reserve(args_.size());
  for (const auto& a : args_) kids.push_back(a->to_normal());
  return NormalWord::make(target_->letter(), std::move(kids));
}

namespace {

// Generates by recursing on compositions of degree-1 into child degrees.
// The marker, when enabled, is the letter with index `letters`; `marked`
// tracks how many marker occurrences remain to place.
class Enumerator {
 public:
  Enumerator(int letters, bool with_marker, TermBudget* budget)
      : letters_(letters), with_marker_(with_marker), budget_(budget) {}

  // All words of `degree` containing exactly `marked` markers.
  const std::vector<WordPtr>& words(int degree, int marked) {
    auto key = std::make_pair(degree, marked);
    if (auto it = word_memo_.find(key); it != word_memo_.end())
      return it->second;
    std::vector<WordPtr> out;
    if (degree >= 1 && marked >= 0 && marked <= degree) {
      for (int head = 0; head < letters_; ++head) {
        for (const auto& kids : sequences(degree - 1, marked)) {
          if (budget_) budget_->charge();
          out.push_back(NormalWord::make(Letter{head}, kids));
        }
      }
      if (with_marker_ && marked >= 1) {
        for (const auto& kids : sequences(degree - 1, marked - 1)) {
          if (budget_) budget_->charge();
          out.push_back(NormalWord::make(Letter{letters_}, kids));
        }
      }
    }
    return word_memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Ordered child sequences of total degree `total` holding exactly `marked`
  // markers. total == 0 yields the single empty sequence.
  const std::vector<std::vector<WordPtr>>& sequences(int total, int marked) {
    auto key = std::make_pair(total, marked);
    if (auto it = seq_memo_.find(key); it != seq_memo_.end()) return it->second;
    std::vector<std::vector<WordPtr>> out;
    if (total == 0) {
      if (marked == 0) out.push_back({});
    } else if (marked >= 0) {
      for (int first = 1; first <= total; ++first) {
        int cap = std::min(marked, first);
        for (int my = 0; my <= cap; ++my) {
          const auto& heads = words(first, my);
          if (heads.empty()) continue;
          const auto& tails = sequences(total - first, marked - my);
          for (const auto& h : heads) {
            for (const auto& t : tails) {
              std::vector<WordPtr> seq;
              seq.reserve(1 + t.size());
              seq.push_back(h);
              seq.insert(seq.end(), t.begin(), t.end());
              out.push_back(std::move(seq));
            }
          }
        }
      }
    }
    return seq_memo_.emplace(key, std::move(out)).first->second;
  }

  int letters_;
  bool with_marker_;
  TermBudget* budget_;
  std::map<std::pair<int, int>, std::vector<WordPtr>> word_memo_;
  std::map<std::pair<int, int>, std::vector<std::vector<WordPtr>>> seq_memo_;
};

std::vector<WordPtr> enumerate_impl(int letters, int degree, bool with_marker,
                                    int marked, TermBudget* budget) {
  if (letters < 1) throw std::invalid_argument("alphabet must be nonempty");
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  if (marked < 0) throw std::invalid_argument("marked count must be >= 0");
  Enumerator en(letters, with_marker, budget);
  std::vector<WordPtr> out = en.words(degree, marked);
  std::sort(out.begin(), out.end(), WordPtrLess{});
  return out;
}

}  // namespace

std::vector<WordPtr> enumerate_normal(int letters, int degree) {
  return enumerate_impl(letters, degree, false, 0, nullptr);
}

std::vector<WordPtr> enumerate_normal(int letters, int degree,
                                      TermBudget& budget) {
  return enumerate_impl(letters, degree, false, 0, &budget);
}

std::vector<WordPtr> enumerate_marked(int letters, int degree, int marked) {
  return enumerate_impl(letters, degree, true, marked, nullptr);
}

std::vector<WordPtr> enumerate_marked(int letters, int degree, int marked,
                                      TermBudget& budget) {
  return enumerate_impl(letters, degree, true, marked, &budget);
}

}  // namespace brace
