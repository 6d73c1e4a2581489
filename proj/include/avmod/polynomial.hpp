#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>

#include "avmod/multi_index.hpp"
#include "avmod/rational.hpp"

namespace avmod {

/// Element of A = Q[x1..xn]. Terms are kept grlex-descending with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational, GrlexDescending>;

  /// The zero polynomial in n variables.
  explicit Polynomial(std::size_t n);

  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial monomial(const MultiIndex& k, const Rational& c = 1);
  /// x_{i+1}; i is zero-based.
  static Polynomial variable(std::size_t n, std::size_t i);

  std::size_t dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational coeff(const MultiIndex& k) const;
  /// Total degree; -1 for zero.
  int degree() const noexcept;

  /// Adds c*x^k in place, dropping the term if it cancels.
  void add_term(const MultiIndex& k, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, const Rational& c);
/// d^k f / dx^k.
Polynomial poly_partial(const Polynomial& f, const MultiIndex& k);
/// d f / dx_{i+1}.
Polynomial poly_partial(const Polynomial& f, std::size_t i);
Polynomial poly_pow(const Polynomial& f, unsigned e);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return poly_add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return poly_sub(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }
inline Polynomial operator*(const Rational& c, const Polynomial& f) { return poly_scale(f, c); }

std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace avmod
