#pragma once

#include <string>
#include <string_view>

#include "avmod/gauge.hpp"

namespace avmod {

/// Reads a gauge spec document:
///   { "n": int, "rank": int, "B": [matrix, ...],
///     "rho": [ { "k": [int, ...], "p": int, "matrix": matrix }, ... ] }
/// where a matrix is a row-major list of rows of polynomial strings and p is
/// 1-based. Unknown fields, malformed polynomials and inconsistent shapes
/// throw SpecError. The result is validated.
GaugeModuleSpec gauge_spec_from_json(std::string_view text);
/// Inverse of gauge_spec_from_json, pretty-printed with a trailing newline.
std::string gauge_spec_to_json(const GaugeModuleSpec& spec);

}  // namespace avmod
