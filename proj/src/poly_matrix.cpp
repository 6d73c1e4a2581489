#include "avmod/poly_matrix.hpp"

#include "avmod/errors.hpp"

namespace avmod {

PolyMatrix::PolyMatrix(std::size_t n, std::size_t rank) : n_(n), rank_(rank), entries_(rank * rank, Polynomial(n)) {
  if (n == 0) throw DimensionError("PolyMatrix: dimension must be positive");
  if (rank == 0) throw SpecError("PolyMatrix: rank must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t rank) {
  PolyMatrix m(n, rank);
  for (std::size_t i = 0; i < rank; ++i) m.at(i, i) = Polynomial::constant(n, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.empty() || rows.front().empty()) throw SpecError("PolyMatrix: empty matrix");
  const std::size_t rank = rows.size();
  const std::size_t n = rows.front().front().dim();
  PolyMatrix m(n, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (rows[i].size() != rank) {
      throw SpecError("PolyMatrix: row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(rank));
    }
    for (std::size_t j = 0; j < rank; ++j) {
      if (rows[i][j].dim() != n) throw SpecError("PolyMatrix: entries of different dimensions");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  require_same_dim(n_, other.n_, "PolyMatrix::operator+=");
  require_same_dim(rank_, other.rank_, "PolyMatrix::operator+= (rank)");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  require_same_dim(n_, other.n_, "PolyMatrix::operator-=");
  require_same_dim(rank_, other.rank_, "PolyMatrix::operator-= (rank)");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix_mul");
  require_same_dim(a.rank(), b.rank(), "matrix_mul (rank)");
  const std::size_t d = a.rank();
  PolyMatrix out(a.dim(), d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t l = 0; l < d; ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (!b(l, j).is_zero()) out.at(i, j) += a(i, l) * b(l, j);
      }
    }
  }
  return out;
}

PolyMatrix matrix_commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

PolyMatrix matrix_partial(const PolyMatrix& a, std::size_t i) {
  PolyMatrix out(a.dim(), a.rank());
  for (std::size_t r = 0; r < a.rank(); ++r) {
    for (std::size_t c = 0; c < a.rank(); ++c) out.at(r, c) = poly_partial(a(r, c), i);
  }
  return out;
}

PolyMatrix matrix_scale(const PolyMatrix& a, const Rational& c) {
  PolyMatrix out(a.dim(), a.rank());
  for (std::size_t r = 0; r < a.rank(); ++r) {
    for (std::size_t k = 0; k < a.rank(); ++k) out.at(r, k) = poly_scale(a(r, k), c);
  }
  return out;
}

std::string to_string(const PolyMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rank(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < a.rank(); ++j) {
      if (j) s += ", ";
      s += to_string(a(i, j));
    }
    s += "]";
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& a) { return os << to_string(a); }

}  // namespace avmod
