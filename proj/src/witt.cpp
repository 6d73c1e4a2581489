#include "avmod/witt.hpp"

#include <stdexcept>

#include "avmod/errors.hpp"
#include "avmod/format.hpp"

namespace avmod {

VectorFieldGen::VectorFieldGen(MultiIndex k_, std::size_t dir_) : k(std::move(k_)), dir(dir_) {
  if (dir >= k.dim()) {
    throw DimensionError("VectorFieldGen: direction " + std::to_string(dir + 1) +
                         " out of range for n = " + std::to_string(k.dim()));
  }
}

std::strong_ordering gen_compare(const VectorFieldGen& a, const VectorFieldGen& b) {
  require_same_dim(a.dim(), b.dim(), "gen_compare");
  if (auto c = a.k.total() <=> b.k.total(); c != 0) return c;
  if (auto c = a.k <=> b.k; c != 0) return c;
  return a.dir <=> b.dir;
}

VectorField::VectorField(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("VectorField: dimension must be positive");
}

VectorField VectorField::generator(const VectorFieldGen& g, const Rational& c) {
  VectorField v(g.dim());
  v.add_term(g, c);
  return v;
}

VectorField VectorField::from_polynomial(const Polynomial& f, std::size_t dir) {
  VectorField v(f.dim());
  for (const auto& [k, c] : f.terms()) v.add_term(VectorFieldGen(k, dir), c);
  return v;
}

void VectorField::add_term(const VectorFieldGen& g, const Rational& c) {
  require_same_dim(n_, g.dim(), "VectorField::add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  require_same_dim(n_, other.n_, "VectorField::operator+=");
  for (const auto& [g, c] : other.terms_) add_term(g, c);
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  require_same_dim(n_, other.n_, "VectorField::operator-=");
  for (const auto& [g, c] : other.terms_) add_term(g, -c);
  return *this;
}

namespace {

// scale * x^{k+l-e_i} d_dir. A negative exponent can only appear together
// with a zero scale; anything else is an indexing bug.
void add_shifted(VectorField& out, const MultiIndex& kl, std::size_t i, int scale, std::size_t dir) {
  if (scale == 0) return;
  auto exp = kl.minus(MultiIndex::unit(kl.dim(), i));
  if (!exp) throw std::logic_error("gen_bracket: negative exponent with nonzero coefficient");
  out.add_term(VectorFieldGen(*exp, dir), scale);
}

}  // namespace

VectorField gen_bracket(const VectorFieldGen& a, const VectorFieldGen& b) {
  require_same_dim(a.dim(), b.dim(), "vf_bracket");
  VectorField out(a.dim());
  const MultiIndex kl = a.k + b.k;
  add_shifted(out, kl, a.dir, b.k[a.dir], b.dir);
  add_shifted(out, kl, b.dir, -a.k[b.dir], a.dir);
  return out;
}

VectorField vf_bracket(const VectorField& a, const VectorField& b) {
  require_same_dim(a.dim(), b.dim(), "vf_bracket");
  VectorField out(a.dim());
  for (const auto& [ga, ca] : a.terms()) {
    for (const auto& [gb, cb] : b.terms()) {
      const VectorField br = gen_bracket(ga, gb);
      for (const auto& [g, c] : br.terms()) out.add_term(g, c * ca * cb);
    }
  }
  return out;
}

Polynomial gen_apply(const VectorFieldGen& g, const Polynomial& f) {
  require_same_dim(g.dim(), f.dim(), "vf_apply");
  return Polynomial::monomial(g.k) * poly_partial(f, g.dir);
}

Polynomial vf_apply(const VectorField& a, const Polynomial& f) {
  require_same_dim(a.dim(), f.dim(), "vf_apply");
  Polynomial out(a.dim());
  for (const auto& [g, c] : a.terms()) out += poly_scale(gen_apply(g, f), c);
  return out;
}

int vf_degree(const VectorFieldGen& g) { return g.degree(); }

bool vf_in_lplus(const VectorField& v) {
  for (const auto& [g, c] : v.terms()) {
    if (!g.in_lplus()) return false;
  }
  return true;
}

std::string gen_string(const VectorFieldGen& g) {
  return format::product(format::monomial(g.k, 'x'), "d" + std::to_string(g.dir + 1));
}

std::string to_string(const VectorField& v) {
  std::vector<std::string> parts;
  for (const auto& [g, c] : v.terms()) parts.push_back(format::scaled(c, gen_string(g)));
  return format::join_terms(parts);
}

std::ostream& operator<<(std::ostream& os, const VectorField& v) { return os << to_string(v); }

}  // namespace avmod
