#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace cmreg {

using Int = mpz_class;
using Rat = mpq_class;

/// C(a, k) with the combinatorial convention: 0 when k < 0 or a < k.
inline Int binomial(long a, long k) {
  if (k < 0 || a < k) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return r;
}

inline Int binomial(const Int& a, long k) {
  if (k < 0 || a < k) return Int(0);
  Int r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline bool is_integer(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_den() == 1;
}

inline Int to_int(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() != 1) throw error(errc::internal, "expected integer, got " + c.get_str());
  return c.get_num();
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_prime(unsigned long p) {
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

} // namespace cmreg
