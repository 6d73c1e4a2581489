#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "avmod/env.hpp"
#include "avmod/multi_index.hpp"
#include "avmod/polynomial.hpp"
#include "avmod/smash.hpp"
#include "avmod/tensor_iso.hpp"
#include "avmod/weyl.hpp"
#include "avmod/witt.hpp"

namespace avmod {

/// Seeded source for test instances. Draws use plain modular reduction on
/// mt19937_64 output so that a seed gives the same instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, n).
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  /// Integer in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }
  /// One of -2, -1, 1, 2.
  int coefficient();

 private:
  std::mt19937_64 engine_;
};

MultiIndex random_multi_index(Rng& rng, std::size_t n, int min_total, int max_total);
/// Generator x^k d_p with min_total <= |k| <= max_total.
VectorFieldGen random_gen(Rng& rng, std::size_t n, int min_total, int max_total);
Polynomial random_poly(Rng& rng, std::size_t n, int max_deg, std::size_t max_terms);
WeylElement random_weyl(Rng& rng, std::size_t n, int max_deg, std::size_t max_terms);
VectorField random_vector_field(Rng& rng, std::size_t n, int max_k, std::size_t max_terms);
/// Sum of up to max_terms products of up to max_len generators.
EnvElement random_env(Rng& rng, std::size_t n, int max_k, std::size_t max_len, std::size_t max_terms,
                      Restriction restriction = Restriction::all);
/// c * (x^r # g1 ... gm) with |r| <= max_r, |k_i| <= max_k, m <= max_len.
SmashElement random_smash_product(Rng& rng, std::size_t n, int max_r, int max_k, std::size_t max_len);
SmashElement random_smash(Rng& rng, std::size_t n, int max_r, int max_k, std::size_t max_len,
                          std::size_t max_terms);
/// c * (x^r d^s (x) g1 ... gm) with |r|, |s| <= max_rs and 1 <= |k_i| <= max_k.
TensorElement random_tensor_product(Rng& rng, std::size_t n, int max_rs, int max_k, std::size_t max_len);

}  // namespace avmod
