#include "avmod/env.hpp"

#include <algorithm>

#include "avmod/errors.hpp"
#include "avmod/format.hpp"

namespace avmod {

bool PBWMonomial::is_sorted() const {
  return std::is_sorted(gens.begin(), gens.end(), GenLess{});
}

bool WordLess::operator()(const GenSequence& a, const GenSequence& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = gen_compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

EnvElement::EnvElement(std::size_t n, Restriction restriction) : n_(n), restriction_(restriction) {
  if (n == 0) throw DimensionError("EnvElement: dimension must be positive");
}

EnvElement EnvElement::unit(std::size_t n, Restriction restriction) {
  return scalar(n, 1, restriction);
}

EnvElement EnvElement::scalar(std::size_t n, const Rational& c, Restriction restriction) {
  EnvElement a(n, restriction);
  a.add_term(PBWMonomial{}, c);
  return a;
}

EnvElement EnvElement::generator(const VectorFieldGen& g, Restriction restriction) {
  EnvElement a(g.dim(), restriction);
  a.add_term(PBWMonomial{{g}}, 1);
  return a;
}

EnvElement EnvElement::from_vector_field(const VectorField& v, Restriction restriction) {
  EnvElement a(v.dim(), restriction);
  for (const auto& [g, c] : v.terms()) a.add_term(PBWMonomial{{g}}, c);
  return a;
}

EnvElement EnvElement::from_sequence(std::size_t n, std::span<const VectorFieldGen> word,
                                     Restriction restriction) {
  EnvElement a(n, restriction);
  a.add_sequence(GenSequence(word.begin(), word.end()), 1);
  return a;
}

void EnvElement::check_generator(const VectorFieldGen& g) const {
  require_same_dim(n_, g.dim(), "EnvElement");
  if (restriction_ == Restriction::lplus && !g.in_lplus()) {
    throw LplusError("generator " + gen_string(g) + " is not in L+");
  }
}

void EnvElement::add_term(const PBWMonomial& w, const Rational& c) {
  for (const auto& g : w.gens) check_generator(g);
  if (!w.is_sorted()) throw std::invalid_argument("EnvElement::add_term: word is not in PBW order");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void EnvElement::add_sequence(GenSequence word, const Rational& c) {
  for (const auto& g : word) check_generator(g);
  if (c == 0) return;
  // Leftmost out-of-order adjacent pair g > h becomes h g + [g, h]. Swaps
  // make a word lexicographically smaller and brackets make it shorter, so
  // always expanding the WordLess-largest pending word visits each word once.
  std::map<GenSequence, Rational, WordLess> pending;
  pending.emplace(std::move(word), c);
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    GenSequence& w = node.key();
    const Rational& coef = node.mapped();
    if (coef == 0) continue;
    std::size_t i = 0;
    while (i + 1 < w.size() && gen_compare(w[i], w[i + 1]) <= 0) ++i;
    if (i + 1 >= w.size()) {
      add_term(PBWMonomial{w}, coef);
      continue;
    }
    const VectorField br = gen_bracket(w[i], w[i + 1]);
    for (const auto& [g, bc] : br.terms()) {
      GenSequence shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.push_back(g);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      pending[std::move(shorter)] += coef * bc;
    }
    std::swap(w[i], w[i + 1]);
    pending[std::move(w)] += coef;
  }
}

EnvElement EnvElement::widened() const {
  EnvElement r = *this;
  r.restriction_ = Restriction::all;
  return r;
}

EnvElement EnvElement::restricted() const {
  EnvElement r(n_, Restriction::lplus);
  for (const auto& [w, c] : terms_) r.add_term(w, c);
  return r;
}

EnvElement EnvElement::operator-() const {
  EnvElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

EnvElement& EnvElement::operator+=(const EnvElement& other) {
  require_same_dim(n_, other.n_, "EnvElement::operator+=");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& other) {
  require_same_dim(n_, other.n_, "EnvElement::operator-=");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

EnvElement env_mul(const EnvElement& a, const EnvElement& b) {
  require_same_dim(a.dim(), b.dim(), "env_mul");
  const Restriction r = (a.restriction() == Restriction::lplus && b.restriction() == Restriction::lplus)
                            ? Restriction::lplus
                            : Restriction::all;
  EnvElement out(a.dim(), r);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      GenSequence word = wa.gens;
      word.insert(word.end(), wb.gens.begin(), wb.gens.end());
      out.add_sequence(std::move(word), ca * cb);
    }
  }
  return out;
}

EnvElement env_commutator(const EnvElement& a, const EnvElement& b) {
  return env_mul(a, b) - env_mul(b, a);
}

std::vector<std::pair<GenSequence, GenSequence>> env_coproduct_split(std::span<const VectorFieldGen> word) {
  const std::size_t m = word.size();
  if (m >= 8 * sizeof(std::size_t)) throw std::length_error("env_coproduct_split: word too long");
  std::vector<std::pair<GenSequence, GenSequence>> out;
  out.reserve(std::size_t{1} << m);
  // Bit (m-1-i) of the mask sends word[i] to the left leg.
  for (std::size_t mask = (std::size_t{1} << m); mask-- > 0;) {
    GenSequence left, right;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << (m - 1 - i))) {
        left.push_back(word[i]);
      } else {
        right.push_back(word[i]);
      }
    }
    out.emplace_back(std::move(left), std::move(right));
  }
  return out;
}

Polynomial env_act_word(std::span<const VectorFieldGen> word, const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) g = gen_apply(*it, g);
  return g;
}

Polynomial env_act_on_poly(const EnvElement& a, const Polynomial& f) {
  require_same_dim(a.dim(), f.dim(), "env_act_on_poly");
  Polynomial out(a.dim());
  for (const auto& [w, c] : a.terms()) out += poly_scale(env_act_word(w.gens, f), c);
  return out;
}

std::string word_string(const PBWMonomial& w) {
  std::string out;
  for (const auto& g : w.gens) out = format::product(out, gen_string(g));
  return out;
}

std::string to_string(const EnvElement& a) {
  std::vector<std::string> parts;
  for (const auto& [w, c] : a.terms()) parts.push_back(format::scaled(c, word_string(w)));
  return format::join_terms(parts);
}

std::ostream& operator<<(std::ostream& os, const EnvElement& a) { return os << to_string(a); }

}  // namespace avmod
