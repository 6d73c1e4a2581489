#include "avmod/comb.hpp"

#include "avmod/errors.hpp"

namespace avmod {

namespace {

int sign_of(int exponent_sum) { return exponent_sum % 2 == 0 ? 1 : -1; }

// x^a y^b as a monomial in 2n variables.
MultiIndex xy(const MultiIndex& a, const MultiIndex& b) {
  std::vector<int> e(a.exponents().begin(), a.exponents().end());
  e.insert(e.end(), b.exponents().begin(), b.exponents().end());
  return MultiIndex(std::move(e));
}

// Shared left side of (b) and (c); `alternating` selects (c).
Polynomial comb_lhs(const MultiIndex& k, const MultiIndex& l, std::size_t p, bool alternating) {
  const std::size_t n = k.dim();
  const MultiIndex kl = k + l;
  Polynomial out(2 * n);
  for_each_below(k, [&](const MultiIndex& m) {
    if (!alternating && m.is_zero()) return;
    for_each_below(l, [&](const MultiIndex& j) {
      if (!alternating && j.is_zero()) return;
      if (j[p] == 0) return;  // j_p factor vanishes
      const MultiIndex x_exp = *kl.minus(m + j);
      const MultiIndex y_exp = *(m + j).minus(MultiIndex::unit(n, p));
      Rational c(mi_binomial(k, m) * mi_binomial(l, j) * j[p]);
      if (alternating) c *= sign_of(x_exp.total());
      out.add_term(xy(x_exp, y_exp), c);
    });
  });
  return out;
}

// sum over j <= top of (+-1) C(top, j) x^{top - j} y^j.
Polynomial binomial_row(const MultiIndex& top, bool skip_zero, bool alternating) {
  Polynomial out(2 * top.dim());
  for_each_below(top, [&](const MultiIndex& j) {
    if (skip_zero && j.is_zero()) return;
    const MultiIndex x_exp = *top.minus(j);
    Rational c(mi_binomial(top, j));
    if (alternating) c *= sign_of(x_exp.total());
    out.add_term(xy(x_exp, j), c);
  });
  return out;
}

// x^a as a monomial in 2n variables.
Polynomial x_power(const MultiIndex& a) {
  return Polynomial::monomial(xy(a, MultiIndex(a.dim())));
}

}  // namespace

Integer lemma_comb_a_sum(const MultiIndex& k) {
  Integer sum = 0;
  for_each_below(k, [&](const MultiIndex& m) { sum += mi_binomial(k, m) * sign_of(m.total()); });
  return sum;
}

CombSides lemma_comb_sides(CombPart part, const MultiIndex& k, const MultiIndex& l, std::size_t p) {
  require_same_dim(k.dim(), l.dim(), "lemma_comb_check");
  if (part == CombPart::a) throw std::invalid_argument("lemma_comb_sides: part a has no polynomial sides");
  if (p >= k.dim()) throw DimensionError("lemma_comb_check: direction out of range");
  const std::size_t n = k.dim();
  const bool alternating = part == CombPart::c;

  CombSides sides{comb_lhs(k, l, p, alternating), Polynomial(2 * n)};
  if (l[p] == 0) return sides;  // every right-hand term carries l_p

  const MultiIndex e_p = MultiIndex::unit(n, p);
  const MultiIndex top = *(k + l).minus(e_p);
  const Rational lp(l[p]);
  if (part == CombPart::b) {
    // x^{k+l-j-e_p} = x^k * x^{(l-e_p)-j} for the second sum.
    const MultiIndex l_minus = *l.minus(e_p);
    Polynomial second = x_power(k) * binomial_row(l_minus, true, false);
    sides.rhs = lp * (binomial_row(top, true, false) - second);
  } else {
    sides.rhs = lp * binomial_row(top, false, true);
  }
  return sides;
}

bool lemma_comb_check(CombPart part, const MultiIndex& k, const MultiIndex& l, std::size_t p) {
  if (part == CombPart::a) return lemma_comb_a_sum(k) == (k.is_zero() ? 1 : 0);
  auto sides = lemma_comb_sides(part, k, l, p);
  return sides.lhs == sides.rhs;
}

}  // namespace avmod
