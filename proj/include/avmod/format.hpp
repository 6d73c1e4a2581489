#pragma once

#include <string>
#include <vector>

#include "avmod/multi_index.hpp"
#include "avmod/rational.hpp"

namespace avmod::format {

/// "x1^2*x3"; empty for the zero index. `var` is 'x' or 'd'.
std::string monomial(const MultiIndex& k, char var);

/// A coefficient times a (possibly empty) product body: "3/2*x1", "-x2", "5".
std::string scaled(const Rational& c, const std::string& body);

/// Joins signed term strings as "a + b - c"; "0" when empty.
std::string join_terms(const std::vector<std::string>& terms);

/// Joins two factor strings with "*", skipping empty ones.
std::string product(const std::string& a, const std::string& b);

}  // namespace avmod::format
