#include "avmod/tensor_iso.hpp"

#include "avmod/errors.hpp"
#include "avmod/format.hpp"

namespace avmod {

bool TensorKeyLess::operator()(const TensorKey& a, const TensorKey& b) const {
  const WeylWordDescending weyl;
  if (weyl(a.d, b.d)) return true;
  if (weyl(b.d, a.d)) return false;
  return WordLess{}(a.w, b.w);
}

TensorElement::TensorElement(std::size_t n) : n_(n) {
  if (n == 0) throw DimensionError("TensorElement: dimension must be positive");
}

TensorElement TensorElement::unit(std::size_t n) {
  return tensor(WeylElement::scalar(n, 1), EnvElement::unit(n, Restriction::lplus));
}

TensorElement TensorElement::tensor(const WeylElement& a, const EnvElement& u) {
  require_same_dim(a.dim(), u.dim(), "TensorElement::tensor");
  TensorElement t(a.dim());
  for (const auto& [wd, ca] : a.terms()) {
    for (const auto& [w, cu] : u.terms()) t.add_term({wd, w}, ca * cu);
  }
  return t;
}

void TensorElement::add_term(const TensorKey& key, const Rational& c) {
  require_same_dim(n_, key.d.r.dim(), "TensorElement::add_term");
  require_same_dim(n_, key.d.s.dim(), "TensorElement::add_term");
  for (const auto& g : key.w.gens) {
    require_same_dim(n_, g.dim(), "TensorElement::add_term");
    if (!g.in_lplus()) throw LplusError("TensorElement: generator " + gen_string(g) + " is not in L+");
  }
  if (!key.w.is_sorted()) throw std::invalid_argument("TensorElement::add_term: word is not in PBW order");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  require_same_dim(n_, other.n_, "TensorElement::operator+=");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  require_same_dim(n_, other.n_, "TensorElement::operator-=");
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  require_same_dim(a.dim(), b.dim(), "tensor_mul");
  const std::size_t n = a.dim();
  TensorElement out(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      WeylElement left(n);
      weyl_mul_words(ka.d, kb.d, 1, left);
      GenSequence word = ka.w.gens;
      word.insert(word.end(), kb.w.gens.begin(), kb.w.gens.end());
      const EnvElement right = EnvElement::from_sequence(n, word, Restriction::lplus);
      for (const auto& [wd, cl] : left.terms()) {
        for (const auto& [w, cr] : right.terms()) out.add_term({wd, w}, ca * cb * cl * cr);
      }
    }
  }
  return out;
}

TensorElement tensor_commutator(const TensorElement& a, const TensorElement& b) {
  return tensor_mul(a, b) - tensor_mul(b, a);
}

TensorElement phi_gen(const VectorFieldGen& g) {
  const std::size_t n = g.dim();
  TensorElement out(n);
  out.add_term({{g.k, MultiIndex::unit(n, g.dir)}, PBWMonomial{}}, 1);
  for_each_below(g.k, [&](const MultiIndex& m) {
    if (m.is_zero()) return;
    out.add_term({{*g.k.minus(m), MultiIndex(n)}, PBWMonomial{{VectorFieldGen(m, g.dir)}}},
                 Rational(mi_binomial(g.k, m)));
  });
  return out;
}

TensorElement phi(const SmashElement& a) {
  const std::size_t n = a.dim();
  std::map<VectorFieldGen, TensorElement, GenLess> images;
  auto image = [&](const VectorFieldGen& g) -> const TensorElement& {
    auto it = images.find(g);
    if (it == images.end()) it = images.emplace(g, phi_gen(g)).first;
    return it->second;
  };
  TensorElement out(n);
  for (const auto& [key, c] : a.terms()) {
    TensorElement acc(n);
    acc.add_term({{key.r, MultiIndex(n)}, PBWMonomial{}}, c);
    for (const auto& g : key.w.gens) acc = tensor_mul(acc, image(g));
    out += acc;
  }
  return out;
}

SmashElement psi_D(const MultiIndex& r, const MultiIndex& s) {
  require_same_dim(r.dim(), s.dim(), "psi_D");
  const std::size_t n = r.dim();
  GenSequence word;
  for (std::size_t i = 0; i < n; ++i) {
    for (int e = 0; e < s[i]; ++e) word.emplace_back(MultiIndex(n), i);
  }
  return SmashElement::term(r, PBWMonomial{std::move(word)});
}

SmashElement psi_L(const VectorFieldGen& g) {
  if (!g.in_lplus()) throw LplusError("psi_L: generator " + gen_string(g) + " is not in L+");
  SmashElement out(g.dim());
  for_each_below(g.k, [&](const MultiIndex& k) {
    const MultiIndex rest = *g.k.minus(k);
    Rational c(mi_binomial(g.k, k));
    if (rest.total() % 2 != 0) c = -c;
    out.add_term({rest, PBWMonomial{{VectorFieldGen(k, g.dir)}}}, c);
  });
  return out;
}

SmashElement psi(const TensorElement& b) {
  const std::size_t n = b.dim();
  std::map<VectorFieldGen, SmashElement, GenLess> images;
  auto image = [&](const VectorFieldGen& g) -> const SmashElement& {
    auto it = images.find(g);
    if (it == images.end()) it = images.emplace(g, psi_L(g)).first;
    return it->second;
  };
  SmashElement out(n);
  for (const auto& [key, c] : b.terms()) {
    SmashElement acc = psi_D(key.d.r, key.d.s);
    for (const auto& g : key.w.gens) acc = smash_mul(acc, image(g));
    for (const auto& [k, v] : acc.terms()) out.add_term(k, v * c);
  }
  return out;
}

namespace {

SmashElement smash_gen(const VectorFieldGen& g) { return SmashElement::from_env(EnvElement::generator(g)); }

TensorElement lplus_gen(const VectorFieldGen& g) {
  return TensorElement::tensor(WeylElement::scalar(g.dim(), 1), EnvElement::generator(g, Restriction::lplus));
}

TensorElement weyl_leg(const WeylElement& a) {
  return TensorElement::tensor(a, EnvElement::unit(a.dim(), Restriction::lplus));
}

}  // namespace

bool check_phi_hom(const VectorFieldGen& g1, const VectorFieldGen& g2, const IsoMaps& maps) {
  require_same_dim(g1.dim(), g2.dim(), "check_phi_hom");
  const TensorElement lhs = tensor_commutator(maps.phi(smash_gen(g1)), maps.phi(smash_gen(g2)));
  const TensorElement rhs = maps.phi(SmashElement::from_env(EnvElement::from_vector_field(gen_bracket(g1, g2))));
  return lhs == rhs;
}

bool check_phi_hom_function(const VectorFieldGen& g, const Polynomial& f, const IsoMaps& maps) {
  require_same_dim(g.dim(), f.dim(), "check_phi_hom_function");
  const SmashElement a = smash_gen(g);
  const SmashElement b = SmashElement::from_poly(f);
  return tensor_commutator(maps.phi(a), maps.phi(b)) == maps.phi(smash_commutator(a, b));
}

bool check_psi_hom(const VectorFieldGen& g1, const VectorFieldGen& g2, const IsoMaps& maps) {
  require_same_dim(g1.dim(), g2.dim(), "check_psi_hom");
  const SmashElement lhs = smash_commutator(maps.psi(lplus_gen(g1)), maps.psi(lplus_gen(g2)));
  const TensorElement bracket = TensorElement::tensor(
      WeylElement::scalar(g1.dim(), 1), EnvElement::from_vector_field(gen_bracket(g1, g2), Restriction::lplus));
  return lhs == maps.psi(bracket);
}

bool check_psi_hom_weyl(const WeylElement& a, const WeylElement& b, const IsoMaps& maps) {
  const SmashElement lhs = smash_commutator(maps.psi(weyl_leg(a)), maps.psi(weyl_leg(b)));
  return lhs == maps.psi(weyl_leg(weyl_commutator(a, b)));
}

bool check_psi_weyl_relations(std::size_t n, const IsoMaps& maps) {
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const WeylElement xp = WeylElement::x(n, p), xq = WeylElement::x(n, q);
      const WeylElement dp = WeylElement::d(n, p), dq = WeylElement::d(n, q);
      if (!check_psi_hom_weyl(xp, xq, maps)) return false;
      if (!check_psi_hom_weyl(dp, dq, maps)) return false;
      if (!check_psi_hom_weyl(dp, xq, maps)) return false;
      // The relation itself, not only its image.
      const SmashElement bracket = smash_commutator(maps.psi(weyl_leg(dp)), maps.psi(weyl_leg(xq)));
      if (bracket != SmashElement::from_poly(Polynomial::constant(n, p == q ? 1 : 0))) return false;
    }
  }
  return true;
}

bool check_psi_commuting(const VectorFieldGen& g, const IsoMaps& maps) {
  const std::size_t n = g.dim();
  const SmashElement image = maps.psi(lplus_gen(g));
  for (std::size_t q = 0; q < n; ++q) {
    if (!smash_commutator(maps.psi(weyl_leg(WeylElement::x(n, q))), image).is_zero()) return false;
    if (!smash_commutator(maps.psi(weyl_leg(WeylElement::d(n, q))), image).is_zero()) return false;
  }
  return true;
}

bool check_roundtrip(const SmashElement& a, const IsoMaps& maps) { return maps.psi(maps.phi(a)) == a; }

bool check_roundtrip_tensor(const TensorElement& b, const IsoMaps& maps) { return maps.phi(maps.psi(b)) == b; }

std::string to_string(const TensorElement& a) {
  std::vector<std::string> parts;
  for (const auto& [k, c] : a.terms()) {
    const std::string rhs = k.w.is_unit() ? "1" : word_string(k.w);
    parts.push_back(format::scaled(c, word_string(k.d)) + " @ " + rhs);
  }
  return format::join_terms(parts);
}

std::ostream& operator<<(std::ostream& os, const TensorElement& a) { return os << to_string(a); }

}  // namespace avmod
