#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "avmod/polynomial.hpp"
#include "avmod/rational.hpp"
#include "avmod/witt.hpp"

namespace avmod {

using GenSequence = std::vector<VectorFieldGen>;

/// PBW basis word: generators weakly increasing in gen_compare order. The
/// empty word is the unit.
struct PBWMonomial {
  GenSequence gens;

  std::size_t length() const noexcept { return gens.size(); }
  bool is_unit() const noexcept { return gens.empty(); }
  bool is_sorted() const;

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

/// Shorter words first, then lexicographic in generator order.
struct WordLess {
  bool operator()(const GenSequence& a, const GenSequence& b) const;
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    return (*this)(a.gens, b.gens);
  }
};

enum class Restriction { all, lplus };

/// Element of U(V), or of U(L+) when restricted to generators of degree >= 0.
class EnvElement {
 public:
  using Terms = std::map<PBWMonomial, Rational, WordLess>;

  explicit EnvElement(std::size_t n, Restriction restriction = Restriction::all);

  static EnvElement unit(std::size_t n, Restriction restriction = Restriction::all);
  static EnvElement scalar(std::size_t n, const Rational& c, Restriction restriction = Restriction::all);
  static EnvElement generator(const VectorFieldGen& g, Restriction restriction = Restriction::all);
  static EnvElement from_vector_field(const VectorField& v, Restriction restriction = Restriction::all);
  /// Normal form of an arbitrary (unsorted) product of generators.
  static EnvElement from_sequence(std::size_t n, std::span<const VectorFieldGen> word,
                                  Restriction restriction = Restriction::all);

  std::size_t dim() const noexcept { return n_; }
  Restriction restriction() const noexcept { return restriction_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * w; w must already be a sorted PBW word.
  void add_term(const PBWMonomial& w, const Rational& c);
  /// Adds c * (g1 g2 ... gm) after rewriting to PBW normal form.
  void add_sequence(GenSequence word, const Rational& c);

  /// Same element viewed in U(V).
  EnvElement widened() const;
  /// Same element viewed in U(L+); throws LplusError when impossible.
  EnvElement restricted() const;

  EnvElement operator-() const;
  EnvElement& operator+=(const EnvElement& other);
  EnvElement& operator-=(const EnvElement& other);

  friend bool operator==(const EnvElement&, const EnvElement&) = default;

 private:
  void check_generator(const VectorFieldGen& g) const;

  std::size_t n_;
  Restriction restriction_;
  Terms terms_;
};

/// PBW product. The result is restricted to U(L+) only when both factors are.
EnvElement env_mul(const EnvElement& a, const EnvElement& b);
EnvElement env_commutator(const EnvElement& a, const EnvElement& b);

/// All 2^m splits of Delta(g1...gm) = prod (gi (x) 1 + 1 (x) gi), each leg in
/// the relative order of the input word. The first entry puts every
/// generator in the left leg, the last puts every generator in the right.
std::vector<std::pair<GenSequence, GenSequence>> env_coproduct_split(std::span<const VectorFieldGen> word);

/// Action on A; the rightmost generator of a word applies first.
Polynomial env_act_on_poly(const EnvElement& a, const Polynomial& f);
Polynomial env_act_word(std::span<const VectorFieldGen> word, const Polynomial& f);

inline EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
inline EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
inline EnvElement operator*(const EnvElement& a, const EnvElement& b) { return env_mul(a, b); }

/// "x1*d1*x1^2*d2"; each generator is a monomial prefix closed by one d.
/// Empty for the unit word.
std::string word_string(const PBWMonomial& w);
std::string to_string(const EnvElement& a);
std::ostream& operator<<(std::ostream& os, const EnvElement& a);

}  // namespace avmod
