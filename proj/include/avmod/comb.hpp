#pragma once

#include <cstddef>

#include "avmod/multi_index.hpp"
#include "avmod/polynomial.hpp"

namespace avmod {

/// The three binomial identities behind the homomorphism proofs for phi and psi.
///
///  (a)  sum_{0<=m<=k} (-1)^|m| C(k,m) = [k == 0]
///  (b)  sum_{0<m<=k, 0<j<=l} C(k,m) C(l,j) j_p x^{k+l-m-j} y^{m+j-e_p}
///         = l_p sum_{0<j<=k+l-e_p} C(k+l-e_p, j) x^{k+l-j-e_p} y^j
///         - l_p sum_{0<j<=l-e_p}   C(l-e_p, j)   x^{k+l-j-e_p} y^j
///  (c)  sum_{0<=m<=k, 0<=j<=l} (-1)^|k+l-m-j| C(k,m) C(l,j) j_p x^{k+l-m-j} y^{m+j-e_p}
///         = l_p sum_{0<=j<=k+l-e_p} (-1)^|k+l-j-e_p| C(k+l-e_p, j) x^{k+l-j-e_p} y^j
///
/// Sides of (b) and (c) are polynomials in 2n variables: x_i is variable i
/// and y_i is variable n+i.
enum class CombPart { a, b, c };

/// Left side of (a).
Integer lemma_comb_a_sum(const MultiIndex& k);

struct CombSides {
  Polynomial lhs;
  Polynomial rhs;
};

/// Both sides of (b) or (c) by direct summation over the stated ranges.
/// `p` is a zero-based direction.
CombSides lemma_comb_sides(CombPart part, const MultiIndex& k, const MultiIndex& l, std::size_t p);

/// Evaluates both sides and compares them exactly. For part a, `l` and `p`
/// are ignored.
bool lemma_comb_check(CombPart part, const MultiIndex& k, const MultiIndex& l, std::size_t p);

}  // namespace avmod
