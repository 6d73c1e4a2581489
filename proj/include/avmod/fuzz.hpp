#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "avmod/tensor_iso.hpp"

namespace avmod {

struct FuzzConfig {
  std::size_t n = 2;
  /// Bound on |r|, |s| and |k| of sampled terms and generators.
  int max_deg = 3;
  /// Bound on PBW word length of sampled terms.
  std::size_t max_len = 2;
  std::size_t iterations = 100;
  std::uint64_t seed = 0;
};

struct FuzzFailure {
  std::string property;
  std::size_t iteration = 0;
  /// Bounds after shrinking; the failure reproduces at these bounds.
  int max_deg = 0;
  std::size_t max_len = 0;
  /// Printed inputs of the shrunk instance.
  std::vector<std::string> inputs;
};

struct FuzzReport {
  FuzzConfig config;
  /// Number of checks per property, in property order.
  std::vector<std::pair<std::string, std::size_t>> checked;
  std::size_t failures = 0;
  std::vector<FuzzFailure> first_failures;  // at most one, kept as a list for the JSON mirror
  bool passed() const noexcept { return failures == 0; }
};

/// Names of the fuzzed properties, in the order they rotate through
/// iterations: L1, L2, L3, both roundtrips, multiplicativity of phi and psi,
/// associativity of the smash product.
const std::vector<std::string>& fuzz_properties();

/// Deterministic for a given config. Iteration i checks property
/// i mod fuzz_properties().size() on inputs drawn from a stream seeded by
/// (seed, i). The first failure is shrunk by lowering max_deg, then max_len,
/// one step at a time while the same stream still fails.
FuzzReport fuzz(const FuzzConfig& config, const IsoMaps& maps = {});

std::string to_text(const FuzzReport& report);
std::string report_to_json(const FuzzReport& report);

}  // namespace avmod
