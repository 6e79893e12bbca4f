#include <qindep/nu.hpp>

#include <cassert>

namespace qindep {

ExtNat nu_p_int(const Int& n, const Int& p) {
  if (p < 2) throw std::invalid_argument("nu_p_int: p must be a prime >= 2");
  assert(is_probable_prime(p) && "nu_p_int: p must be prime");
  if (n == 0) return ExtNat::infinity();
  Int reduced;
  mp_bitcnt_t e = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return ExtNat(Int(static_cast<unsigned long>(e)));
}

ExtVal nu_p_rat(const Rat& q, const Int& p) {
  if (q == 0) return ExtVal::infinity();
  ExtNat num = nu_p_int(q.get_num(), p);
  ExtNat den = nu_p_int(q.get_den(), p);
  return ExtVal(num.finite() - den.finite());
}

}  // namespace qindep
