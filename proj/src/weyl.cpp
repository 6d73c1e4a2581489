#include "avmod/weyl.hpp"

#include "avmod/errors.hpp"
#include "avmod/format.hpp"

namespace avmod {

bool WeylWordDescending::operator()(const WeylWord& a, const WeylWord& b) const {
  const int da = a.r.total() + a.s.total();
  const int db = b.r.total() + b.s.total();
  if (da != db) return da > db;
  if (a.r != b.r) return a.r > b.r;
  return a.s > b.s;
}

WeylElement::WeylElement(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("WeylElement: dimension must be positive");
}

WeylElement WeylElement::scalar(std::size_t n, const Rational& c) {
  WeylElement a(n);
  a.add_term({MultiIndex(n), MultiIndex(n)}, c);
  return a;
}

WeylElement WeylElement::word(const MultiIndex& r, const MultiIndex& s, const Rational& c) {
  require_same_dim(r.dim(), s.dim(), "WeylElement::word");
  WeylElement a(r.dim());
  a.add_term({r, s}, c);
  return a;
}

WeylElement WeylElement::x(std::size_t n, std::size_t i) {
  return word(MultiIndex::unit(n, i), MultiIndex(n));
}

WeylElement WeylElement::d(std::size_t n, std::size_t i) {
  return word(MultiIndex(n), MultiIndex::unit(n, i));
}

WeylElement WeylElement::from_polynomial(const Polynomial& f) {
  WeylElement a(f.dim());
  for (const auto& [k, c] : f.terms()) a.add_term({k, MultiIndex(f.dim())}, c);
  return a;
}

void WeylElement::add_term(const WeylWord& w, const Rational& c) {
  require_same_dim(n_, w.r.dim(), "WeylElement::add_term");
  require_same_dim(n_, w.s.dim(), "WeylElement::add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& other) {
  require_same_dim(n_, other.n_, "WeylElement::operator+=");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& other) {
  require_same_dim(n_, other.n_, "WeylElement::operator-=");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

void weyl_mul_words(const WeylWord& left, const WeylWord& right, const Rational& c, WeylElement& out) {
  // d^b x^c = sum_{t <= min(b,c)} t! C(b,t) C(c,t) x^{c-t} d^{b-t}
  const MultiIndex bound = mi_min(left.s, right.r);
  for_each_below(bound, [&](const MultiIndex& t) {
    const Integer weight = mi_factorial(t) * mi_binomial(left.s, t) * mi_binomial(right.r, t);
    WeylWord w{left.r + *right.r.minus(t), *left.s.minus(t) + right.s};
    out.add_term(w, c * Rational(weight));
  });
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  require_same_dim(a.dim(), b.dim(), "weyl_mul");
  WeylElement out(a.dim());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) weyl_mul_words(wa, wb, ca * cb, out);
  }
  return out;
}

WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) {
  return weyl_mul(a, b) - weyl_mul(b, a);
}

Polynomial weyl_apply(const WeylElement& a, const Polynomial& f) {
  require_same_dim(a.dim(), f.dim(), "weyl_apply");
  Polynomial out(a.dim());
  for (const auto& [w, c] : a.terms()) {
    out += poly_scale(Polynomial::monomial(w.r) * poly_partial(f, w.s), c);
  }
  return out;
}

std::string word_string(const WeylWord& w) {
  return format::product(format::monomial(w.r, 'x'), format::monomial(w.s, 'd'));
}

std::string to_string(const WeylElement& a) {
  std::vector<std::string> parts;
  for (const auto& [w, c] : a.terms()) parts.push_back(format::scaled(c, word_string(w)));
  return format::join_terms(parts);
}

std::ostream& operator<<(std::ostream& os, const WeylElement& a) { return os << to_string(a); }

}  // namespace avmod
