#include "avmod/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "avmod/errors.hpp"

namespace avmod {

MultiIndex::MultiIndex(std::size_t n) : exps_(n, 0) {
  if (n == 0) throw DimensionError("MultiIndex: dimension must be positive");
}

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw DimensionError("MultiIndex: dimension must be positive");
  for (int e : exps_) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent " + std::to_string(e));
  }
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("MultiIndex::unit: index out of range");
  MultiIndex e(n);
  e.exps_[i] = 1;
  return e;
}

int MultiIndex::total() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool MultiIndex::is_zero() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require_same_dim(dim(), other.dim(), "MultiIndex::operator+");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
  require_same_dim(dim(), other.dim(), "MultiIndex::minus");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < dim(); ++i) {
    r.exps_[i] -= other.exps_[i];
    if (r.exps_[i] < 0) return std::nullopt;
  }
  return r;
}

MultiIndex MultiIndex::with(std::size_t i, int value) const {
  if (value < 0) throw std::invalid_argument("MultiIndex::with: negative exponent");
  MultiIndex r = *this;
  r.exps_.at(i) = value;
  return r;
}

bool mi_leq(const MultiIndex& m, const MultiIndex& k) {
  require_same_dim(m.dim(), k.dim(), "mi_leq");
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m[i] > k[i]) return false;
  }
  return true;
}

Integer mi_binomial(const MultiIndex& k, const MultiIndex& m) {
  require_same_dim(k.dim(), m.dim(), "mi_binomial");
  Integer r = 1;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    if (m[i] > k[i]) return 0;
    r *= binomial(static_cast<unsigned long>(k[i]), static_cast<unsigned long>(m[i]));
  }
  return r;
}

Integer mi_factorial(const MultiIndex& k) {
  Integer r = 1;
  for (int e : k.exponents()) r *= factorial(static_cast<unsigned long>(e));
  return r;
}

MultiIndex mi_min(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a.dim(), b.dim(), "mi_min");
  std::vector<int> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
  return MultiIndex(std::move(r));
}

std::strong_ordering grlex_compare(const MultiIndex& a, const MultiIndex& b) {
  require_same_dim(a.dim(), b.dim(), "grlex_compare");
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void for_each_below(const MultiIndex& k, const std::function<void(const MultiIndex&)>& f) {
  std::vector<int> cur(k.dim(), 0);
  while (true) {
    f(MultiIndex(cur));
    std::size_t i = k.dim();
    while (i > 0) {
      --i;
      if (cur[i] < k[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return;
    }
  }
}

namespace {

void compositions(std::size_t n, int degree, std::size_t pos, std::vector<int>& cur,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = degree;
    out.emplace_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    compositions(n, degree - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, int degree) {
  if (n == 0) throw DimensionError("multi_indices_of_degree: dimension must be positive");
  std::vector<MultiIndex> out;
  if (degree < 0) return out;
  std::vector<int> cur(n, 0);
  compositions(n, degree, 0, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_between(std::size_t n, int lo, int hi) {
  std::vector<MultiIndex> out;
  for (int d = std::max(lo, 0); d <= hi; ++d) {
    auto level = multi_indices_of_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace avmod
