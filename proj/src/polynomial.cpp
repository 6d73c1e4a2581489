#include "avmod/polynomial.hpp"

#include "avmod/errors.hpp"
#include "avmod/format.hpp"

namespace avmod {

Polynomial::Polynomial(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("Polynomial: dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial f(n);
  f.add_term(MultiIndex(n), c);
  return f;
}

Polynomial Polynomial::monomial(const MultiIndex& k, const Rational& c) {
  Polynomial f(k.dim());
  f.add_term(k, c);
  return f;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  return monomial(MultiIndex::unit(n, i));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Polynomial::coeff(const MultiIndex& k) const {
  require_same_dim(n_, k.dim(), "Polynomial::coeff");
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.begin()->first.total();
}

void Polynomial::add_term(const MultiIndex& k, const Rational& c) {
  require_same_dim(n_, k.dim(), "Polynomial::add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dim(n_, other.n_, "poly_add");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dim(n_, other.n_, "poly_sub");
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  Polynomial r = f;
  r += g;
  return r;
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
  Polynomial r = f;
  r -= g;
  return r;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_same_dim(f.dim(), g.dim(), "poly_mul");
  Polynomial r(f.dim());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) r.add_term(a + b, ca * cb);
  }
  return r;
}

Polynomial poly_scale(const Polynomial& f, const Rational& c) {
  Polynomial r(f.dim());
  if (c == 0) return r;
  for (const auto& [k, a] : f.terms()) r.add_term(k, a * c);
  return r;
}

Polynomial poly_partial(const Polynomial& f, const MultiIndex& k) {
  require_same_dim(f.dim(), k.dim(), "poly_partial");
  Polynomial r(f.dim());
  for (const auto& [m, c] : f.terms()) {
    auto rest = m.minus(k);
    if (!rest) continue;
    // d^k x^m = m!/(m-k)! x^(m-k)
    Integer falling = mi_binomial(m, k) * mi_factorial(k);
    r.add_term(*rest, c * Rational(falling));
  }
  return r;
}

Polynomial poly_partial(const Polynomial& f, std::size_t i) {
  return poly_partial(f, MultiIndex::unit(f.dim(), i));
}

Polynomial poly_pow(const Polynomial& f, unsigned e) {
  Polynomial r = Polynomial::constant(f.dim(), 1);
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

std::string to_string(const Polynomial& f) {
  std::vector<std::string> parts;
  parts.reserve(f.terms().size());
  for (const auto& [k, c] : f.terms()) parts.push_back(format::scaled(c, format::monomial(k, 'x')));
  return format::join_terms(parts);
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace avmod
