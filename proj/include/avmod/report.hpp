#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avmod/poly_matrix.hpp"

namespace avmod {

/// One family of identity checks: how many instances ran, how many failed,
/// and the first failure.
struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// First failing identity, empty when everything passed.
  std::string counterexample;
  /// Residual matrix of the first failure, for the matrix identities.
  std::optional<PolyMatrix> residual;
  bool passed() const noexcept { return failed == 0; }
};

struct VerificationReport {
  std::string title;
  /// Printed under the title when nonempty.
  std::string convention;
  std::vector<CheckResult> checks;
  bool passed() const;
};

std::string to_text(const VerificationReport& report);
/// Machine-readable mirror of to_text(report).
std::string report_to_json(const VerificationReport& report);

}  // namespace avmod
