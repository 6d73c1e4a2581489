#include "avmod/smash.hpp"

#include "avmod/errors.hpp"
#include "avmod/format.hpp"

namespace avmod {

bool SmashKeyLess::operator()(const SmashKey& a, const SmashKey& b) const {
  if (auto c = grlex_compare(a.r, b.r); c != 0) return c > 0;
  return WordLess{}(a.w, b.w);
}

SmashElement::SmashElement(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("SmashElement: dimension must be positive");
}

SmashElement SmashElement::unit(std::size_t n) { return term(MultiIndex(n), PBWMonomial{}); }

SmashElement SmashElement::from_poly(const Polynomial& f) {
  SmashElement a(f.dim());
  for (const auto& [k, c] : f.terms()) a.add_term({k, PBWMonomial{}}, c);
  return a;
}

SmashElement SmashElement::from_env(const EnvElement& u) {
  return tensor(Polynomial::constant(u.dim(), 1), u);
}

SmashElement SmashElement::tensor(const Polynomial& f, const EnvElement& u) {
  require_same_dim(f.dim(), u.dim(), "SmashElement::tensor");
  SmashElement a(f.dim());
  for (const auto& [k, cf] : f.terms()) {
    for (const auto& [w, cu] : u.terms()) a.add_term({k, w}, cf * cu);
  }
  return a;
}

SmashElement SmashElement::term(const MultiIndex& r, const PBWMonomial& w, const Rational& c) {
  SmashElement a(r.dim());
  a.add_term({r, w}, c);
  return a;
}

void SmashElement::add_term(const SmashKey& key, const Rational& c) {
  require_same_dim(n_, key.r.dim(), "SmashElement::add_term");
  for (const auto& g : key.w.gens) require_same_dim(n_, g.dim(), "SmashElement::add_term");
  if (!key.w.is_sorted()) throw std::invalid_argument("SmashElement::add_term: word is not in PBW order");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SmashElement SmashElement::operator-() const {
  SmashElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

SmashElement& SmashElement::operator+=(const SmashElement& other) {
  require_same_dim(n_, other.n_, "SmashElement::operator+=");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

SmashElement& SmashElement::operator-=(const SmashElement& other) {
  require_same_dim(n_, other.n_, "SmashElement::operator-=");
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

SmashElement smash_mul(const SmashElement& a, const SmashElement& b) {
  require_same_dim(a.dim(), b.dim(), "smash_mul");
  const std::size_t n = a.dim();
  SmashElement out(n);
  for (const auto& [ka, ca] : a.terms()) {
    const auto splits = env_coproduct_split(ka.w.gens);
    for (const auto& [kb, cb] : b.terms()) {
      const Polynomial g = Polynomial::monomial(kb.r);
      for (const auto& [left, right] : splits) {
        const Polynomial acted = env_act_word(left, g);
        if (acted.is_zero()) continue;
        GenSequence word = right;
        word.insert(word.end(), kb.w.gens.begin(), kb.w.gens.end());
        const EnvElement tail = EnvElement::from_sequence(n, word);
        for (const auto& [r, cp] : acted.terms()) {
          const MultiIndex r_total = ka.r + r;
          for (const auto& [w, cw] : tail.terms()) out.add_term({r_total, w}, ca * cb * cp * cw);
        }
      }
    }
  }
  return out;
}

SmashElement smash_commutator(const SmashElement& a, const SmashElement& b) {
  return smash_mul(a, b) - smash_mul(b, a);
}

std::string to_string(const SmashElement& a) {
  std::vector<std::string> parts;
  for (const auto& [k, c] : a.terms()) {
    const std::string rhs = k.w.is_unit() ? "1" : word_string(k.w);
    parts.push_back(format::scaled(c, format::monomial(k.r, 'x')) + " # " + rhs);
  }
  return format::join_terms(parts);
}

std::ostream& operator<<(std::ostream& os, const SmashElement& a) { return os << to_string(a); }

}  // namespace avmod
