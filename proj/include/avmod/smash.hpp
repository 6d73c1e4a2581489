#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>

#include "avmod/env.hpp"
#include "avmod/polynomial.hpp"
#include "avmod/rational.hpp"

namespace avmod {

/// Basis element x^r # w of A # U(V).
struct SmashKey {
  MultiIndex r;
  PBWMonomial w;

  friend bool operator==(const SmashKey&, const SmashKey&) = default;
};

/// r grlex-descending, then PBW word order.
struct SmashKeyLess {
  bool operator()(const SmashKey& a, const SmashKey& b) const;
};

/// Element of the smash product A # U(V).
class SmashElement {
 public:
  using Terms = std::map<SmashKey, Rational, SmashKeyLess>;

  explicit SmashElement(std::size_t n);

  static SmashElement unit(std::size_t n);
  /// f # 1
  static SmashElement from_poly(const Polynomial& f);
  /// 1 # u
  static SmashElement from_env(const EnvElement& u);
  /// f # u
  static SmashElement tensor(const Polynomial& f, const EnvElement& u);
  static SmashElement term(const MultiIndex& r, const PBWMonomial& w, const Rational& c = 1);

  std::size_t dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const SmashKey& key, const Rational& c);

  SmashElement operator-() const;
  SmashElement& operator+=(const SmashElement& other);
  SmashElement& operator-=(const SmashElement& other);

  friend bool operator==(const SmashElement&, const SmashElement&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

/// (f # u)(g # v) = sum_i f u_i'(g) # u_i'' v over the coproduct splits of u.
SmashElement smash_mul(const SmashElement& a, const SmashElement& b);
SmashElement smash_commutator(const SmashElement& a, const SmashElement& b);

inline SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
inline SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }
inline SmashElement operator*(const SmashElement& a, const SmashElement& b) { return smash_mul(a, b); }

/// "3/2*x1 # x1*d2 - x2 # 1"
std::string to_string(const SmashElement& a);
std::ostream& operator<<(std::ostream& os, const SmashElement& a);

}  // namespace avmod
