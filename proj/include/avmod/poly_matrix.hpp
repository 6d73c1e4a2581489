#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "avmod/polynomial.hpp"
#include "avmod/rational.hpp"

namespace avmod {

/// Square matrix of polynomials: an A-linear endomorphism of A^rank in the
/// standard frame. Matrices act on coordinate columns.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, std::size_t rank);
  static PolyMatrix identity(std::size_t n, std::size_t rank);
  /// Row-major; throws SpecError unless square, nonempty and of one dimension.
  static PolyMatrix from_rows(const std::vector<std::vector<Polynomial>>& rows);

  std::size_t dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rank_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * rank_ + j]; }
  bool is_zero() const;

  PolyMatrix operator-() const;
  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t rank_;
  std::vector<Polynomial> entries_;
};

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matrix_commutator(const PolyMatrix& a, const PolyMatrix& b);
/// Entrywise d/dx_{i+1}.
PolyMatrix matrix_partial(const PolyMatrix& a, std::size_t i);
PolyMatrix matrix_scale(const PolyMatrix& a, const Rational& c);

inline PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
inline PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
inline PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return matrix_mul(a, b); }

/// "[[x1, 0], [0, -1]]"
std::string to_string(const PolyMatrix& a);
std::ostream& operator<<(std::ostream& os, const PolyMatrix& a);

}  // namespace avmod
