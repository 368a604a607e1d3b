#include "brace/onerelator.hpp"

#include <stdexcept>

namespace brace {

namespace {

Homomorphism make_psi(int letters, const Polynomial& relator) {
  std::vector<Polynomial> images;
  images.reserve(letters + 1);
  for (int i = 0; i < letters; ++i) images.push_back(Polynomial::letter({i}));
  images.push_back(relator);
  return Homomorphism(std::move(images));
}

}  // namespace

OneRelatorIdeal::OneRelatorIdeal(int letters, Polynomial relator)
    : letters_(letters),
      relator_(std::move(relator)),
      original_lc_(0),
      psi_(Homomorphism({})) {
  if (letters_ < 1) throw std::invalid_argument("alphabet must be nonempty");
  if (relator_.is_zero())
    throw std::invalid_argument("relator must be nonzero");
  if (max_letter(relator_) >= letters_)
    throw std::invalid_argument("relator uses letters outside the alphabet");
  original_lc_ = relator_.leading_coefficient();
  relator_ = relator_ / original_lc_;
  relator_degree_ = relator_.degree();
  psi_ = make_psi(letters_, relator_);
}

const std::vector<BElement>& OneRelatorIdeal::b_elements(
    int degree, TermBudget& budget) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (auto it = cache_.find(degree); it != cache_.end()) return it->second;
  std::vector<BElement> out;
  int marked_degree = degree - relator_degree_ + 1;
  if (marked_degree >= 1) {
    for (const auto& u : enumerate_marked(letters_, marked_degree, 1)) {
      Polynomial image = apply_hom(psi_, Polynomial::from_word(u), budget);
      out.push_back({u, std::move(image)});
    }
  }
  return cache_.emplace(degree, std::move(out)).first->second;
}

std::size_t OneRelatorIdeal::cached_degree_count() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.size();
}

MembershipResult decide_membership(const OneRelatorIdeal& ideal,
                                   const Polynomial& h, TermBudget& budget) {
  MembershipResult result;
  Polynomial rest = h;
  while (!rest.is_zero()) {
    if (rest.degree() < ideal.relator_degree()) return {};
    auto [lead, lc] = rest.leading();
    const BElement* match = nullptr;
    for (const auto& g : ideal.b_elements(rest.degree(), budget)) {
      if (words_equal(g.image.leading_word(), lead)) {
        match = &g;
        break;
      }
    }
    if (!match) return {};
    Rational alpha = lc / match->image.leading_coefficient();
    rest.add_scaled(match->image, -alpha);
    result.certificate.steps.push_back({alpha, match->marked_word});
  }
  result.member = true;
  return result;
}

MembershipResult decide_membership(const OneRelatorIdeal& ideal,
                                   const Polynomial& h) {
  TermBudget budget;
  return decide_membership(ideal, h, budget);
}

bool verify_certificate(const OneRelatorIdeal& ideal, const Polynomial& h,
                        const MembershipCertificate& cert, TermBudget& budget) {
  Polynomial sum;
  for (const auto& step : cert.steps) {
    Polynomial image = apply_hom(
        ideal.psi(), Polynomial::from_word(step.marked_word), budget);
    sum.add_scaled(image, step.coefficient);
  }
  return sum == h;
}

bool verify_certificate(const OneRelatorIdeal& ideal, const Polynomial& h,
                        const MembershipCertificate& cert) {
  TermBudget budget;
  return verify_certificate(ideal, h, cert, budget);
}

bool freiheitssatz_probe(int letters, const Polynomial& f, const Polynomial& h,
                         TermBudget& budget) {
  if (letters < 1) throw std::invalid_argument("alphabet must be nonempty");
  Letter top{letters - 1};
  if (f.is_zero() || !mentions(f, top))
    throw std::invalid_argument("relator must involve the top letter");
  if (h.is_zero())
    throw std::invalid_argument("probe element must be nonzero");
  if (mentions(h, top))
    throw std::invalid_argument("probe element must be free of the top letter");
  OneRelatorIdeal ideal(letters, f);
  return !decide_membership(ideal, h, budget).member;
}

bool freiheitssatz_probe(int letters, const Polynomial& f,
                         const Polynomial& h) {
  TermBudget budget;
  return freiheitssatz_probe(letters, f, h, budget);
}

}  // namespace brace
