#include "brace/algebra.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace brace {

namespace {

// Expansion of <args;target> with target = <u_n,...,u_1;x>. Enumerates the
// splits of args into blocks V_2n,...,V_0 (display order, leftmost first),
// expands each nonempty odd block against its child, and assembles the
// multilinear combinations.
class WordProduct {
 public:
  WordProduct(std::span<const WordPtr> args, const WordPtr& target,
              TermBudget& budget)
      : args_(args), target_(target), budget_(budget) {}

  Polynomial run() {
    const int n = static_cast<int>(target_->children().size());
    sizes_.assign(2 * n + 1, 0);
    splits(0, static_cast<int>(args_.size()));
    return std::move(out_);
  }

 private:
  void splits(int block, int remaining) {
    const int last = static_cast<int>(sizes_.size()) - 1;
    if (block == last) {
      sizes_[block] = remaining;
      expand_split();
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      sizes_[block] = s;
      splits(block + 1, remaining - s);
    }
  }

  void expand_split() {
    const auto& kids = target_->children();
    const int n = static_cast<int>(kids.size());
    inner_.clear();
    int offset = 0;
    even_offsets_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      even_offsets_[i] = offset;
      offset += sizes_[2 * i];
      const int len = sizes_[2 * i + 1];
      if (len == 0) {
        inner_.push_back(Polynomial::from_word(kids[i]));
      } else {
        inner_.push_back(
            product_words(args_.subspan(offset, len), kids[i], budget_));
      }
      offset += len;
    }
    even_offsets_[n] = offset;
    kidbuf_.clear();
    combine(0, Rational(1));
  }

  void combine(int slot, const Rational& coeff) {
    const int n = static_cast<int>(inner_.size());
    const int block_len =
        slot == n ? static_cast<int>(args_.size()) - even_offsets_[n]
                  : sizes_[2 * slot];
    for (int j = 0; j < block_len; ++j)
      kidbuf_.push_back(args_[even_offsets_[slot] + j]);
    if (slot == n) {
      budget_.charge();
      out_.add_term(NormalWord::make(target_->head(), kidbuf_), coeff);
    } else {
      for (const auto& [w, c] : inner_[slot].terms()) {
        kidbuf_.push_back(w);
        combine(slot + 1, coeff * c);
        kidbuf_.pop_back();
      }
    }
    kidbuf_.resize(kidbuf_.size() - block_len);
  }

  std::span<const WordPtr> args_;
  const WordPtr& target_;
  TermBudget& budget_;
  std::vector<int> sizes_;         // block sizes, display order
  std::vector<int> even_offsets_;  // arg offset of even block i
  std::vector<Polynomial> inner_;  // expanded odd blocks, one per child
  std::vector<WordPtr> kidbuf_;
  Polynomial out_;
};

}  // namespace

Polynomial product_words(std::span<const WordPtr> args, const WordPtr& target,
                         TermBudget& budget) {
  if (args.empty())
    throw std::invalid_argument("product: argument list is empty");
  if (target->is_letter()) {
    budget.charge();
    std::vector<WordPtr> kids(args.begin(), args.end());
    return Polynomial::from_word(NormalWord::make(target->head(), std::move(kids)));
  }
  return WordProduct(args, target, budget).run();
}

Polynomial product_words(std::span<const WordPtr> args, const WordPtr& target) {
  TermBudget budget;
  return product_words(args, target, budget);
}

Polynomial product(std::span<const Polynomial> args, const Polynomial& target,
                   TermBudget& budget) {
  if (args.empty())
    throw std::invalid_argument("product: argument list is empty");
  Polynomial out;
  std::vector<WordPtr> chosen(args.size());
  std::function<void(std::size_t, const Rational&)> pick =
      [&](std::size_t i, const Rational& coeff) {
        if (i == args.size()) {
          for (const auto& [t, ct] : target.terms())
            out.add_scaled(product_words(chosen, t, budget), coeff * ct);
          return;
        }
        for (const auto& [w, c] : args[i].terms()) {
          chosen[i] = w;
          pick(i + 1, coeff * c);
        }
      };
  pick(0, Rational(1));
  return out;
}

Polynomial product(std::span<const Polynomial> args, const Polynomial& target) {
  TermBudget budget;
  return product(args, target, budget);
}

Polynomial normalize(const GeneralPtr& w, TermBudget& budget) {
  if (w->is_leaf()) return Polynomial::letter(w->letter());
  std::vector<Polynomial> args;
  args.reserve(w->args().size());
  for (const auto& a : w->args()) args.push_back(normalize(a, budget));
  Polynomial target = normalize(w->target(), budget);
  return product(args, target, budget);
}

Polynomial normalize(const GeneralPtr& w) {
  TermBudget budget;
  return normalize(w, budget);
}

Homomorphism Homomorphism::identity(int letters) {
  std::vector<Polynomial> images;
  images.reserve(letters);
  for (int i = 0; i < letters; ++i) images.push_back(Polynomial::letter({i}));
  return Homomorphism(std::move(images));
}

const Polynomial& Homomorphism::image(Letter x) const {
  if (x.id < 0 || x.id >= static_cast<int>(images_.size()))
    throw std::invalid_argument("homomorphism: no image for letter " +
                                std::to_string(x.id));
  return images_[x.id];
}

namespace {

Polynomial image_of_word(const Homomorphism& h, const WordPtr& w,
                         std::map<WordPtr, Polynomial, WordPtrLess>& memo,
                         TermBudget& budget) {
  if (w->is_letter()) return h.image(w->head());
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::vector<Polynomial> args;
  args.reserve(w->children().size());
  for (const auto& c : w->children())
    args.push_back(image_of_word(h, c, memo, budget));
  Polynomial result = product(args, h.image(w->head()), budget);
  memo.emplace(w, result);
  return result;
}

}  // namespace

Polynomial apply_hom(const Homomorphism& h, const Polynomial& f,
                     TermBudget& budget) {
  std::map<WordPtr, Polynomial, WordPtrLess> memo;
  Polynomial out;
  for (const auto& [w, c] : f.terms())
    out.add_scaled(image_of_word(h, w, memo, budget), c);
  return out;
}

Polynomial apply_hom(const Homomorphism& h, const Polynomial& f) {
  TermBudget budget;
  return apply_hom(h, f, budget);
}

Polynomial substitute_single(const WordPtr& q, const Polynomial& value,
                             TermBudget& budget) {
  std::vector<Polynomial> images;
  images.push_back(value);
  return apply_hom(Homomorphism(std::move(images)),
                   Polynomial::from_word(q), budget);
}

}  // namespace brace
