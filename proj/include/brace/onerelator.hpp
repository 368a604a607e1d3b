#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "brace/algebra.hpp"
#include "brace/polynomial.hpp"

namespace brace {

// One step of a membership presentation: coefficient times the image of a
// singly-marked normal word under the substitution homomorphism.
struct CertificateStep {
  Rational coefficient;
  WordPtr marked_word;  // over the extended alphabet, exactly one marker
};

// Presents h as sum coefficient_i * psi(u_i) with the leading words of the
// psi(u_i) strictly decreasing along the list.
struct MembershipCertificate {
  std::vector<CertificateStep> steps;
};

struct BElement {
  WordPtr marked_word;
  Polynomial image;  // fully expanded psi(marked_word)
};

// The ideal generated by a single relator f in Br(x_1..x_M). The relator is
// stored monic; the original leading coefficient is kept for display. The
// spanning-set cache grows per degree and is guarded, so concurrent
// decisions against one ideal are safe.
class OneRelatorIdeal {
 public:
  OneRelatorIdeal(int letters, Polynomial relator);

  int letters() const { return letters_; }
  const Polynomial& relator() const { return relator_; }  // monic
  const Rational& original_leading_coefficient() const { return original_lc_; }
  int relator_degree() const { return relator_degree_; }

  // Spanning-set elements whose image has degree exactly `degree`: the pairs
  // (u, psi(u)) over all marked words u of degree `degree` - deg(f) + 1.
  // Empty for degree < deg(f). Results are cached; the returned reference
  // stays valid for the ideal's lifetime.
  const std::vector<BElement>& b_elements(int degree, TermBudget& budget) const;

  // Number of degrees whose spanning sets have been materialized.
  std::size_t cached_degree_count() const;

  // x_i -> x_i, marker -> monic relator.
  const Homomorphism& psi() const { return psi_; }

 private:
  int letters_;
  Polynomial relator_;
  Rational original_lc_;
  int relator_degree_;
  Homomorphism psi_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<BElement>> cache_;
};

struct MembershipResult {
  bool member = false;
  MembershipCertificate certificate;  // meaningful only when member
};

// Decides h in Id(f) by leading-word elimination against the spanning set.
// Terminates because leading words strictly decrease in a well order. A
// Member verdict carries a certificate; budget exhaustion surfaces as
// BudgetError, never as NotMember.
MembershipResult decide_membership(const OneRelatorIdeal& ideal,
                                   const Polynomial& h, TermBudget& budget);
MembershipResult decide_membership(const OneRelatorIdeal& ideal,
                                   const Polynomial& h);

// Recomputes sum coefficient_i * psi(u_i) from scratch and compares with h.
bool verify_certificate(const OneRelatorIdeal& ideal, const Polynomial& h,
                        const MembershipCertificate& cert, TermBudget& budget);
bool verify_certificate(const OneRelatorIdeal& ideal, const Polynomial& h,
                        const MembershipCertificate& cert);

// Self-checking assertion that a nonzero h free of the top letter x_M never
// lies in Id(f) when f genuinely involves x_M. Returns true exactly when the
// decision procedure answers NotMember. Preconditions are enforced: f must
// mention x_M and h must be nonzero and free of it.
bool freiheitssatz_probe(int letters, const Polynomial& f, const Polynomial& h,
                         TermBudget& budget);
bool freiheitssatz_probe(int letters, const Polynomial& f, const Polynomial& h);

}  // namespace brace
