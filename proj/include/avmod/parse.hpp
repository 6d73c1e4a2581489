#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "avmod/env.hpp"
#include "avmod/polynomial.hpp"
#include "avmod/smash.hpp"
#include "avmod/tensor_iso.hpp"
#include "avmod/weyl.hpp"
#include "avmod/witt.hpp"

namespace avmod {

enum class Algebra { poly, weyl, vectorfield, env, smash, tensor };

/// "poly", "weyl", "vectorfield", "env", "smash", "tensor"; throws
/// std::invalid_argument on anything else.
Algebra algebra_from_name(std::string_view name);
std::string algebra_name(Algebra a);

// Grammar shared by every algebra:
//   expr   := term (('+'|'-') term)*
//   term   := ['+'|'-'] prod [('#'|'@') prod]
//   prod   := factor ('*' factor)*
//   factor := int ['/' posint] | 'x' nat ['^' nat] | 'd' nat ['^' nat] | '(' expr ')'
// Variable indices are 1-based. All errors are ParseError with the offset of
// the offending token.

Polynomial parse_polynomial(std::string_view text, std::size_t n);
WeylElement parse_weyl(std::string_view text, std::size_t n);
/// Sums of f*d_i; a product may contain at most one d factor.
VectorField parse_vector_field(std::string_view text, std::size_t n);
/// Noncommutative products of generators. Inside a product, x factors
/// accumulate into a monomial that the next d factor closes into a single
/// generator, so "x1*d1*d2" is (x1 d1)(d2).
EnvElement parse_env(std::string_view text, std::size_t n, Restriction restriction = Restriction::all);
/// "poly # env". Outside a '#' term, x_i is x_i # 1, d_i is 1 # d_i and
/// products multiply in the smash product.
SmashElement parse_smash(std::string_view text, std::size_t n);
/// "weyl @ env"; the right leg must lie in U(L+). Bare factors belong to the
/// Weyl leg.
TensorElement parse_tensor(std::string_view text, std::size_t n);

using AnyElement = std::variant<Polynomial, WeylElement, VectorField, EnvElement, SmashElement, TensorElement>;

AnyElement parse(std::string_view text, Algebra algebra, std::size_t n);
std::string to_string(const AnyElement& a);

}  // namespace avmod
