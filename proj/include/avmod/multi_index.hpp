#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "avmod/rational.hpp"

namespace avmod {

/// Exponent vector k in Z^n_{>=0}, used both for monomials x^k and for
/// derivative orders d^k. The dimension n is the vector length and is
/// always at least 1.
class MultiIndex {
 public:
  /// The zero multi-index of dimension n.
  explicit MultiIndex(std::size_t n);
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents)
      : MultiIndex(std::vector<int>(exponents)) {}

  /// The standard basis vector e_i (i is zero-based).
  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t dim() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  /// |k|
  int total() const noexcept;
  bool is_zero() const noexcept;

  MultiIndex operator+(const MultiIndex& other) const;
  /// k - m, or nullopt when some entry would be negative.
  std::optional<MultiIndex> minus(const MultiIndex& other) const;
  MultiIndex with(std::size_t i, int value) const;

  // Plain lexicographic comparison; canonical orders are separate functions.
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exps_;
};

/// Componentwise m <= k.
bool mi_leq(const MultiIndex& m, const MultiIndex& k);

/// prod_i C(k_i, m_i); zero when m is not below k.
Integer mi_binomial(const MultiIndex& k, const MultiIndex& m);

/// prod_i k_i!
Integer mi_factorial(const MultiIndex& k);

MultiIndex mi_min(const MultiIndex& a, const MultiIndex& b);

/// Graded lexicographic order with x1 > x2 > ... > xn.
std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b);

/// Comparator putting the grlex-largest index first.
struct GrlexDescending {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return grlex_compare(a, b) > 0;
  }
};

/// Calls f(m) for every 0 <= m <= k in lexicographic order.
void for_each_below(const MultiIndex& k, const std::function<void(const MultiIndex&)>& f);

/// All multi-indices of dimension n with |k| == degree, grlex-descending.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, int degree);

/// All multi-indices of dimension n with lo <= |k| <= hi, by degree ascending.
std::vector<MultiIndex> multi_indices_between(std::size_t n, int lo, int hi);

}  // namespace avmod
