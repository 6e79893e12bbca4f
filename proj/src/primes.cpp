#include <qindep/primes.hpp>

namespace qindep {

Int next_prime(const Int& x) {
  Int r;
  mpz_nextprime(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Int nth_prime_from(const Int& start, long n) {
  if (n < 1) throw std::invalid_argument("nth_prime_from: n must be >= 1");
  Int p = start - 1;
  for (long i = 0; i < n; ++i) p = next_prime(p);
  return p;
}

FactoredInteger factor_small(const Int& v, unsigned long trial_bound) {
  if (v == 0) throw std::invalid_argument("factor_small: zero");
  Int rest = ::abs(v);
  std::map<Int, Int> factors;
  Int p = 2;
  while (rest > 1) {
    if (is_probable_prime(rest)) {
      factors[rest] += 1;
      rest = 1;
      break;
    }
    if (p > Int(trial_bound))
      throw std::domain_error("factor_small: cofactor exceeds trial bound");
    if (rest % p == 0) {
      Int reduced;
      mp_bitcnt_t e = mpz_remove(reduced.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      factors[p] += static_cast<unsigned long>(e);
      rest = reduced;
    }
    p = next_prime(p);
  }
  return FactoredInteger(v < 0 ? -1 : 1, std::move(factors), 1);
}

std::vector<Int> small_primes(std::size_t count) {
  std::vector<Int> out;
  Int p = 1;
  while (out.size() < count) {
    p = next_prime(p);
    out.push_back(p);
  }
  return out;
}

}  // namespace qindep
