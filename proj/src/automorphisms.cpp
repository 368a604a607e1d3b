#include "brace/automorphisms.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "brace/subalgebras.hpp"

namespace brace {

namespace {

constexpr Letter kX1{0};
constexpr Letter kX2{1};

Letter other_letter(int index) { return index == 1 ? kX2 : kX1; }

Polynomial letter_poly(Letter x) { return Polynomial::letter(x); }

// Coefficient of the bare letter x in a linear form.
Rational linear_coeff(const Polynomial& f, Letter x) {
  for (const auto& [w, c] : f.terms())
    if (w->is_letter() && w->head() == x) return c;
  return 0;
}

bool is_linear_form(const Polynomial& f) {
  if (f.is_zero()) return false;
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const auto& t) { return t.first->is_letter(); });
}

}  // namespace

ElementaryAuto::ElementaryAuto(int index, Rational scalar, Polynomial shift)
    : index_(index), scalar_(std::move(scalar)), shift_(std::move(shift)) {
  if (index_ != 1 && index_ != 2)
    throw std::invalid_argument("elementary index must be 1 or 2");
  if (scalar_ == 0)
    throw std::invalid_argument("elementary scalar must be nonzero");
  if (!shift_.is_zero() && !uses_only(shift_, other_letter(index_)))
    throw std::invalid_argument(
        "elementary shift may only use the other generator");
}

ElementaryAuto ElementaryAuto::inverse() const {
  Rational inv = Rational(1) / scalar_;
  return ElementaryAuto(index_, inv, shift_ * -inv);
}

Endo2 Endo2::identity() { return {letter_poly(kX1), letter_poly(kX2)}; }

Endo2 apply_elementary(const ElementaryAuto& e, const Endo2& phi,
                       TermBudget& budget) {
  Homomorphism as_hom({phi.f1, phi.f2});
  Polynomial shifted = apply_hom(as_hom, e.shift(), budget);
  Endo2 out = phi;
  Polynomial& component = e.index() == 1 ? out.f1 : out.f2;
  component *= e.scalar();
  component += shifted;
  return out;
}

Endo2 compose(const Endo2& outer, const Endo2& inner, TermBudget& budget) {
  Homomorphism as_hom({outer.f1, outer.f2});
  return {apply_hom(as_hom, inner.f1, budget),
          apply_hom(as_hom, inner.f2, budget)};
}

Endo2 replay(std::span<const ElementaryAuto> factors, TermBudget& budget) {
  Endo2 phi = Endo2::identity();
  for (const auto& e : factors) phi = apply_elementary(e, phi, budget);
  return phi;
}

std::optional<std::vector<ElementaryAuto>> decompose_tame(const Endo2& phi,
                                                          TermBudget& budget) {
  PairReport report = reduce_pair(phi.f1, phi.f2, budget);
  if (report.outcome != PairOutcome::free_rank2) return std::nullopt;

  std::vector<ElementaryAuto> applied;
  for (const auto& step : report.steps) {
    int index = step.which == PairSlot::first ? 1 : 2;
    WordPtr q_other = map_letters(
        step.q, [&](Letter) { return other_letter(index); });
    applied.emplace_back(index, Rational(1),
                         Polynomial::from_word(q_other, -step.coefficient));
  }

  Endo2 pair{report.g1, report.g2};
  if (!is_linear_form(pair.f1) || !is_linear_form(pair.f2))
    return std::nullopt;

  auto move = [&](int index, const Rational& scalar, Polynomial shift) {
    ElementaryAuto e(index, scalar, std::move(shift));
    pair = apply_elementary(e, pair, budget);
    applied.push_back(std::move(e));
  };

  // Gaussian elimination to (x1, x2). Pivot in g1 first.
  if (linear_coeff(pair.f1, kX1) == 0) {
    if (linear_coeff(pair.f2, kX1) == 0) return std::nullopt;
    move(1, 1, letter_poly(kX2));
  }
  if (Rational a = linear_coeff(pair.f1, kX1); a != 1)
    move(1, Rational(1) / a, Polynomial());
  if (Rational c = linear_coeff(pair.f2, kX1); c != 0)
    move(2, 1, Polynomial::from_word(NormalWord::leaf(kX1), -c));
  Rational d = linear_coeff(pair.f2, kX2);
  if (d == 0) return std::nullopt;
  if (d != 1) move(2, Rational(1) / d, Polynomial());
  if (Rational b = linear_coeff(pair.f1, kX2); b != 0)
    move(1, 1, Polynomial::from_word(NormalWord::leaf(kX2), -b));
  if (!(pair == Endo2::identity())) return std::nullopt;

  std::vector<ElementaryAuto> factors;
  factors.reserve(applied.size());
  for (auto it = applied.rbegin(); it != applied.rend(); ++it)
    factors.push_back(it->inverse());
  return factors;
}

std::optional<std::vector<ElementaryAuto>> decompose_tame(const Endo2& phi) {
  TermBudget budget;
  return decompose_tame(phi, budget);
}

std::pair<Endo2, std::vector<ElementaryAuto>> random_tame(std::uint64_t seed,
                                                          int steps,
                                                          int max_shift_degree,
                                                          TermBudget& budget) {
  if (steps < 0) throw std::invalid_argument("negative step count");
  if (max_shift_degree < 0)
    throw std::invalid_argument("negative shift degree bound");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto small_rational = [&]() {
    int num = 0;
    while (num == 0) num = pick(-3, 3);
    return make_rational(num, pick(1, 2));
  };

  // Composed degrees are kept under a cap so that expansion stays affordable;
  // every drawn shift degree still respects max_shift_degree.
  const int degree_cap = 3 * std::max(1, max_shift_degree);
  Endo2 phi = Endo2::identity();
  std::vector<ElementaryAuto> factors;
  for (int s = 0; s < steps; ++s) {
    int index = pick(1, 2);
    const Polynomial& other = index == 1 ? phi.f2 : phi.f1;
    int other_degree = other.degree();
    int max_d = 0;
    while (max_d < max_shift_degree &&
           (max_d + 1) * other_degree <= degree_cap)
      ++max_d;
    int d = pick(0, max_d);
    Polynomial shift;
    for (int t = 1; t <= d; ++t) {
      if (t < d && pick(0, 2) == 0) continue;
      auto slice = enumerate_normal(1, t);
      WordPtr w = map_letters(slice[pick(0, static_cast<int>(slice.size()) - 1)],
                              [&](Letter) { return other_letter(index); });
      shift.add_term(w, small_rational());
    }
    ElementaryAuto e(index, small_rational(), std::move(shift));
    phi = apply_elementary(e, phi, budget);
    factors.push_back(std::move(e));
  }
  return {std::move(phi), std::move(factors)};
}

}  // namespace brace
