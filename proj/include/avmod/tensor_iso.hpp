#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>

#include "avmod/env.hpp"
#include "avmod/smash.hpp"
#include "avmod/weyl.hpp"
#include "avmod/witt.hpp"

namespace avmod {

/// Basis element x^r d^s (x) w of D (x) U(L+).
struct TensorKey {
  WeylWord d;
  PBWMonomial w;

  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

struct TensorKeyLess {
  bool operator()(const TensorKey& a, const TensorKey& b) const;
};

/// Element of D (x) U(L+). Every generator in the right leg has |k| >= 1.
class TensorElement {
 public:
  using Terms = std::map<TensorKey, Rational, TensorKeyLess>;

  explicit TensorElement(std::size_t n);

  static TensorElement unit(std::size_t n);
  /// a (x) u; u must lie in U(L+).
  static TensorElement tensor(const WeylElement& a, const EnvElement& u);

  std::size_t dim() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const TensorKey& key, const Rational& c);

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
TensorElement tensor_commutator(const TensorElement& a, const TensorElement& b);

inline TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
inline TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tensor_mul(a, b); }

/// phi(1 # x^k d_p) = x^k d_p (x) 1 + sum_{0<m<=k} C(k,m) x^{k-m} (x) x^m d_p
TensorElement phi_gen(const VectorFieldGen& g);
/// Multiplicative extension: phi(x^r # g1...gm) = (x^r (x) 1) phi(g1)...phi(gm).
TensorElement phi(const SmashElement& a);

/// psi(x^r d^s (x) 1) = x^r # d1^{s1}...dn^{sn}
SmashElement psi_D(const MultiIndex& r, const MultiIndex& s);
/// psi(1 (x) x^m d_p) = sum_{0<=k<=m} (-1)^{|m-k|} C(m,k) x^{m-k} # x^k d_p.
/// Throws LplusError for m = 0.
SmashElement psi_L(const VectorFieldGen& g);
/// Multiplicative extension: psi(x^r d^s (x) g1...gm) = psi_D(r,s) psi_L(g1)...psi_L(gm).
SmashElement psi(const TensorElement& b);

/// The pair of maps every identity check runs through. Tests substitute a
/// deliberately broken map here to confirm that the checks can fail.
struct IsoMaps {
  TensorElement (*phi)(const SmashElement&) = &avmod::phi;
  SmashElement (*psi)(const TensorElement&) = &avmod::psi;
};

/// [phi(g1), phi(g2)] == phi([g1, g2])
bool check_phi_hom(const VectorFieldGen& g1, const VectorFieldGen& g2, const IsoMaps& maps = {});
/// [phi(1 # g), phi(f # 1)] == phi([1 # g, f # 1])
bool check_phi_hom_function(const VectorFieldGen& g, const Polynomial& f, const IsoMaps& maps = {});
/// [psi(1 (x) g1), psi(1 (x) g2)] == psi(1 (x) [g1, g2]) for g1, g2 in L+.
bool check_psi_hom(const VectorFieldGen& g1, const VectorFieldGen& g2, const IsoMaps& maps = {});
/// [psi(a (x) 1), psi(b (x) 1)] == psi([a, b] (x) 1)
bool check_psi_hom_weyl(const WeylElement& a, const WeylElement& b, const IsoMaps& maps = {});
/// The Weyl relations [x_p, x_q] = 0, [d_p, d_q] = 0, [d_p, x_q] = delta_pq
/// are preserved by psi for every p, q.
bool check_psi_weyl_relations(std::size_t n, const IsoMaps& maps = {});
/// psi(x_q (x) 1) and psi(d_q (x) 1) commute with psi(1 (x) g) for every q.
bool check_psi_commuting(const VectorFieldGen& g, const IsoMaps& maps = {});
/// psi(phi(a)) == a
bool check_roundtrip(const SmashElement& a, const IsoMaps& maps = {});
/// phi(psi(b)) == b
bool check_roundtrip_tensor(const TensorElement& b, const IsoMaps& maps = {});

/// "x1^2*d1 @ 1 + 2*x1 @ x1*d1"
std::string to_string(const TensorElement& a);
std::ostream& operator<<(std::ostream& os, const TensorElement& a);

}  // namespace avmod
