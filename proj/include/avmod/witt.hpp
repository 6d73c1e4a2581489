#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>

#include "avmod/multi_index.hpp"
#include "avmod/polynomial.hpp"
#include "avmod/rational.hpp"

namespace avmod {

/// Monomial vector field x^k d/dx_{dir+1}. `dir` is zero-based.
struct VectorFieldGen {
  MultiIndex k;
  std::size_t dir;

  VectorFieldGen(MultiIndex k, std::size_t dir);

  std::size_t dim() const noexcept { return k.dim(); }
  /// |k| - 1; the Witt algebra grading.
  int degree() const noexcept { return k.total() - 1; }
  bool in_lplus() const noexcept { return k.total() >= 1; }

  friend bool operator==(const VectorFieldGen&, const VectorFieldGen&) = default;
};

/// Fixed total order on generators used for PBW words: |k| ascending, then
/// k lexicographically ascending (x1 most significant), then direction.
std::strong_ordering gen_compare(const VectorFieldGen& a, const VectorFieldGen& b);

struct GenLess {
  bool operator()(const VectorFieldGen& a, const VectorFieldGen& b) const {
    return gen_compare(a, b) < 0;
  }
};

/// Polynomial vector field, expanded over monomial generators.
class VectorField {
 public:
  using Terms = std::map<VectorFieldGen, Rational, GenLess>;

  explicit VectorField(std::size_t n);
  static VectorField generator(const VectorFieldGen& g, const Rational& c = 1);
  /// f d/dx_{dir+1}, expanded term by term.
  static VectorField from_polynomial(const Polynomial& f, std::size_t dir);

  std::size_t dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const VectorFieldGen& g, const Rational& c);

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Bracket of two generators:
/// [x^k d_p, x^l d_q] = l_p x^{k+l-e_p} d_q - k_q x^{k+l-e_q} d_p.
VectorField gen_bracket(const VectorFieldGen& a, const VectorFieldGen& b);

VectorField vf_bracket(const VectorField& a, const VectorField& b);
/// Derivation action on A.
Polynomial vf_apply(const VectorField& a, const Polynomial& f);
Polynomial gen_apply(const VectorFieldGen& g, const Polynomial& f);

int vf_degree(const VectorFieldGen& g);
/// True when every generator vanishes at the origin (degree >= 0).
bool vf_in_lplus(const VectorField& v);

inline VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
inline VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }

/// "x1^2*x2*d1"
std::string gen_string(const VectorFieldGen& g);
std::string to_string(const VectorField& v);
std::ostream& operator<<(std::ostream& os, const VectorField& v);

}  // namespace avmod
