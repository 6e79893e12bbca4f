#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qindep {

using Int = mpz_class;
using Rat = mpq_class;

inline std::size_t bit_length(const Int& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool fits_ulong(const Int& x) { return x >= 0 && mpz_fits_ulong_p(x.get_mpz_t()); }

// base^e for non-negative Int exponent. Throws if the result would be absurd
// (exponent not representable as ulong while base has magnitude > 1).
inline Int pow_z(const Int& base, const Int& e) {
  if (e < 0) throw std::invalid_argument("pow_z: negative exponent");
  if (base == 1 || e == 0) return 1;
  if (base == 0) return 0;
  if (base == -1) return mpz_odd_p(e.get_mpz_t()) ? Int(-1) : Int(1);
  if (!fits_ulong(e)) throw std::overflow_error("pow_z: exponent too large to materialize");
  return pow_ui(base, e.get_ui());
}

inline Int pow2(const Int& e) { return pow_z(2, e); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// floor of the k-th root, x >= 0.
inline Int iroot_floor(const Int& x, unsigned long k) {
  if (x < 0) throw std::invalid_argument("iroot_floor: negative radicand");
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline std::string dec(const Int& x) { return x.get_str(); }
inline std::string dec(const Rat& q) { return q.get_str(); }

inline bool is_probable_prime(const Int& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace qindep
