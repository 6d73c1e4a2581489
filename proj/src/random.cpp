#include "avmod/random.hpp"

#include <algorithm>

namespace avmod {

int Rng::coefficient() {
  static constexpr int kChoices[] = {-2, -1, 1, 2};
  return kChoices[below(4)];
}

MultiIndex random_multi_index(Rng& rng, std::size_t n, int min_total, int max_total) {
  std::vector<int> e(n, 0);
  const int total = rng.between(min_total, max_total);
  for (int i = 0; i < total; ++i) ++e[rng.below(n)];
  return MultiIndex(std::move(e));
}

VectorFieldGen random_gen(Rng& rng, std::size_t n, int min_total, int max_total) {
  MultiIndex k = random_multi_index(rng, n, min_total, max_total);
  return VectorFieldGen(std::move(k), rng.below(n));
}

Polynomial random_poly(Rng& rng, std::size_t n, int max_deg, std::size_t max_terms) {
  Polynomial f(n);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) f.add_term(random_multi_index(rng, n, 0, max_deg), rng.coefficient());
  return f;
}

WeylElement random_weyl(Rng& rng, std::size_t n, int max_deg, std::size_t max_terms) {
  WeylElement a(n);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    const int total = rng.between(0, max_deg);
    const int split = rng.between(0, total);
    a.add_term({random_multi_index(rng, n, split, split), random_multi_index(rng, n, total - split, total - split)},
               rng.coefficient());
  }
  return a;
}

VectorField random_vector_field(Rng& rng, std::size_t n, int max_k, std::size_t max_terms) {
  VectorField v(n);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) v.add_term(random_gen(rng, n, 0, max_k), rng.coefficient());
  return v;
}

EnvElement random_env(Rng& rng, std::size_t n, int max_k, std::size_t max_len, std::size_t max_terms,
                      Restriction restriction) {
  const int min_k = restriction == Restriction::lplus ? 1 : 0;
  EnvElement u(n, restriction);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    GenSequence word;
    const std::size_t len = rng.below(max_len + 1);
    for (std::size_t j = 0; j < len; ++j) word.push_back(random_gen(rng, n, min_k, std::max(min_k, max_k)));
    u.add_sequence(std::move(word), rng.coefficient());
  }
  return u;
}

SmashElement random_smash_product(Rng& rng, std::size_t n, int max_r, int max_k, std::size_t max_len) {
  const Rational c = rng.coefficient();
  const MultiIndex r = random_multi_index(rng, n, 0, max_r);
  GenSequence word;
  const std::size_t len = rng.below(max_len + 1);
  for (std::size_t j = 0; j < len; ++j) word.push_back(random_gen(rng, n, 0, max_k));
  EnvElement u(n);
  u.add_sequence(std::move(word), c);
  return SmashElement::tensor(Polynomial::monomial(r), u);
}

SmashElement random_smash(Rng& rng, std::size_t n, int max_r, int max_k, std::size_t max_len,
                          std::size_t max_terms) {
  SmashElement a(n);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) a += random_smash_product(rng, n, max_r, max_k, max_len);
  return a;
}

TensorElement random_tensor_product(Rng& rng, std::size_t n, int max_rs, int max_k, std::size_t max_len) {
  const Rational c = rng.coefficient();
  const MultiIndex r = random_multi_index(rng, n, 0, max_rs);
  const MultiIndex s = random_multi_index(rng, n, 0, max_rs);
  GenSequence word;
  const std::size_t len = rng.below(max_len + 1);
  for (std::size_t j = 0; j < len; ++j) word.push_back(random_gen(rng, n, 1, std::max(1, max_k)));
  EnvElement u(n, Restriction::lplus);
  u.add_sequence(std::move(word), c);
  return TensorElement::tensor(WeylElement::word(r, s), u);
}

}  // namespace avmod
