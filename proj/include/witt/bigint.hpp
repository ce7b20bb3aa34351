#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace witt {

using Int = mpz_class;

inline bool is_divisible(const Int& a, const Int& m) {
  return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()) != 0;
}

// Exact quotient a/m; an inexact division is an internal invariant failure.
inline Int exact_div(const Int& a, const Int& m, const char* what = "exact_div") {
  if (sgn(m) == 0 || !is_divisible(a, m))
    throw std::logic_error(std::string(what) + ": inexact integer division");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_prime(unsigned long n) {
  Int v(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

}  // namespace witt
