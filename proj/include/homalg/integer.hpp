#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace homalg {

/// Arbitrary-precision integer used for every exact computation.
using Integer = mpz_class;

using IntVector = std::vector<Integer>;

inline Integer abs_value(const Integer& x) { return abs(x); }

/// Sign of |a| - |b|.
inline int cmp_abs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline bool is_unit(const Integer& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Floor quotient: a = q*b + r with 0 <= r < |b| when b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least non-negative residue of a modulo m (m > 0).
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with x*a + y*b = g.
inline Integer gcd_ext(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline bool fits_int64(const Integer& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& x) {
  // Values are guarded by fits_int64 at call sites; mpz_get_si covers long.
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

inline Integer from_int64(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace homalg
