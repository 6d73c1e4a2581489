#pragma once

#include <gmpxx.h>

#include <string>

namespace avmod {

// mpq_class keeps every result canonical (lowest terms, positive
// denominator), which is the only invariant we rely on.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "3/2", "-1", "0".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_one(const Rational& q) { return q == 1; }

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace avmod
