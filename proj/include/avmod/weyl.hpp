#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>

#include "avmod/multi_index.hpp"
#include "avmod/polynomial.hpp"
#include "avmod/rational.hpp"

namespace avmod {

/// Normal-ordered word x^r d^s of the Weyl algebra.
struct WeylWord {
  MultiIndex r;
  MultiIndex s;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// Graded lex on the concatenation (r, s), largest first.
struct WeylWordDescending {
  bool operator()(const WeylWord& a, const WeylWord& b) const;
};

/// Element of the Weyl algebra D = Q<x1..xn, d1..dn>, stored in the
/// normal-ordered basis { x^r d^s }.
class WeylElement {
 public:
  using Terms = std::map<WeylWord, Rational, WeylWordDescending>;

  explicit WeylElement(std::size_t n);

  static WeylElement scalar(std::size_t n, const Rational& c);
  static WeylElement word(const MultiIndex& r, const MultiIndex& s, const Rational& c = 1);
  /// Multiplication by x_{i+1}.
  static WeylElement x(std::size_t n, std::size_t i);
  /// d/dx_{i+1}.
  static WeylElement d(std::size_t n, std::size_t i);
  static WeylElement from_polynomial(const Polynomial& f);

  std::size_t dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const WeylWord& w, const Rational& c);

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& other);
  WeylElement& operator-=(const WeylElement& other);

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b);
Polynomial weyl_apply(const WeylElement& a, const Polynomial& f);

/// (x^a d^b)(x^c d^d) reordered into normal form, accumulated into `out`
/// with weight `c`.
void weyl_mul_words(const WeylWord& left, const WeylWord& right, const Rational& c, WeylElement& out);

inline WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
inline WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return weyl_mul(a, b); }

/// Word body without coefficient, e.g. "x1^2*d1"; empty for the unit word.
std::string word_string(const WeylWord& w);
std::string to_string(const WeylElement& a);
std::ostream& operator<<(std::ostream& os, const WeylElement& a);

}  // namespace avmod
