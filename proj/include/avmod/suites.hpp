#pragma once

#include <cstddef>
#include <cstdint>

#include "avmod/report.hpp"
#include "avmod/tensor_iso.hpp"

namespace avmod {

/// Binomial identities (a), (b), (c) for all |k|, |l| <= max_deg and all p.
VerificationReport lemma_suite(std::size_t n, int max_deg);

/// Bracket preservation: phi on pairs of generators (L1), phi against
/// monomials (L2), psi on pairs of L+ generators (L3); all |k| <= max_deg.
VerificationReport hom_suite(std::size_t n, int max_deg, const IsoMaps& maps = {});

/// psi o phi = id and phi o psi = id on the generator families x^r,
/// 1 # x^k d_p, x^r d^s (x) 1 and 1 (x) x^k d_p (all degrees <= max_deg),
/// plus `count` random products drawn from Rng(seed), split evenly between
/// the two sides.
VerificationReport roundtrip_suite(std::size_t n, int max_deg, std::size_t max_len, std::uint64_t seed,
                                   std::size_t count, const IsoMaps& maps = {});

/// phi(ab) = phi(a)phi(b) and psi(st) = psi(s)psi(t) on `pairs` random pairs
/// of products from Rng(seed).
VerificationReport multiplicativity_suite(std::size_t n, int max_deg, std::size_t max_len, std::uint64_t seed,
                                          std::size_t pairs, const IsoMaps& maps = {});

}  // namespace avmod
