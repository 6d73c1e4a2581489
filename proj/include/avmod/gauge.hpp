#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "avmod/poly_matrix.hpp"
#include "avmod/polynomial.hpp"
#include "avmod/report.hpp"
#include "avmod/tensor_iso.hpp"
#include "avmod/witt.hpp"

namespace avmod {

/// Coordinates of an element of the free module A^rank.
class ModuleElement {
 public:
  ModuleElement(std::size_t n, std::size_t rank);
  /// Frame vector e_{j+1}.
  static ModuleElement frame(std::size_t n, std::size_t rank, std::size_t j);
  static ModuleElement from_coords(std::vector<Polynomial> coords);

  std::size_t dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<Polynomial>& coords() const noexcept { return coords_; }
  const Polynomial& operator[](std::size_t j) const { return coords_[j]; }
  bool is_zero() const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::size_t n_;
  std::vector<Polynomial> coords_;
};

inline ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
inline ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
ModuleElement operator*(const PolyMatrix& a, const ModuleElement& m);
ModuleElement operator*(const Polynomial& f, const ModuleElement& m);
/// Coordinatewise d/dx_{i+1}.
ModuleElement module_partial(const ModuleElement& m, std::size_t i);

/// "(x1, 0)"
std::string to_string(const ModuleElement& m);
std::ostream& operator<<(std::ostream& os, const ModuleElement& m);

/// Free module A^rank with gauge fields B_1..B_n and an A-linear action rho
/// of L+ given on finitely many generators; all other generators act as 0.
struct GaugeModuleSpec {
  std::size_t n = 1;
  std::size_t rank = 1;
  std::vector<PolyMatrix> B;
  std::map<VectorFieldGen, PolyMatrix, GenLess> rho;

  /// Throws SpecError on a dimension or rank mismatch, a wrong number of
  /// gauge fields, or a rho key of degree -1.
  void validate() const;
  /// rho(g), the zero matrix outside the support; throws LplusError for |k| = 0.
  PolyMatrix rho_of(const VectorFieldGen& g) const;
  /// Largest degree |k| - 1 in the support, or -1 when rho is empty.
  int max_support_degree() const;
};

/// Rank-1 module A with B = 0 and rho = 0.
GaugeModuleSpec gauge_trivial(std::size_t n, std::size_t rank = 1);
/// The adjoint module V in the frame e_j = d_j: B = 0 and rho(x_q d_p)
/// sends e_q to -e_p; rho vanishes in degrees >= 1.
GaugeModuleSpec gauge_adjoint(std::size_t n);

/// (d_i + B_i) m.
ModuleElement covariant_partial(const GaugeModuleSpec& spec, std::size_t i, const ModuleElement& m);
ModuleElement rho_act(const GaugeModuleSpec& spec, const VectorFieldGen& g, const ModuleElement& m);
/// (f d_i) m = f d_i(m) + f B_i m + sum over the support x^k d_i of (1/k!) (d^k f) rho(x^k d_i) m.
ModuleElement gauge_act(const GaugeModuleSpec& spec, const VectorField& eta, const ModuleElement& m);
/// Action of D (x) U(L+): x^r d^s (x) w acts as x^r (d_1 + B_1)^{s_1} ... (d_n + B_n)^{s_n} rho(w),
/// the factor nearest m applied first.
ModuleElement gauge_act_tensor(const GaugeModuleSpec& spec, const TensorElement& t, const ModuleElement& m);
/// gauge_act(eta, m) == gauge_act_tensor(phi(1 # eta), m).
bool check_phi_transport(const GaugeModuleSpec& spec, const VectorField& eta, const ModuleElement& m);

/// Statement of the composition convention, printed in every gauge report.
extern const char* const kCompositionConvention;

/// GF1: d_i B_j - d_j B_i + [B_i, B_j] = 0 for i < j.
/// GF2: d_i rho(xi) + [B_i, rho(xi)] = 0 for xi in the support and all i.
/// Homomorphism: rho([xi, eta]) = [rho(xi), rho(eta)] for all pairs with
/// deg xi + deg eta <= the largest support degree, and for all pairs of
/// support generators.
VerificationReport gauge_verify(const GaugeModuleSpec& spec);

/// Leibniz rule eta(f m) = f (eta m) + eta(f) m and Lie action
/// [xi, eta] m = xi(eta m) - eta(xi m), exhaustively over generators of
/// degree -1..degree_bound and frame vectors, plus seeded random samples.
VerificationReport check_module_axioms(const GaugeModuleSpec& spec, int degree_bound, std::uint64_t seed);

/// check_phi_transport over all generators with |k| <= max_k against frame
/// vectors and seeded random module elements.
VerificationReport check_phi_transport_suite(const GaugeModuleSpec& spec, int max_k, std::uint64_t seed);


}  // namespace avmod
