#include <qindep/certify.hpp>
#include <qindep/nu.hpp>

#include <sstream>

namespace qindep {

PartialSum partial_sum(const SeriesFamily& fam, int k, long N, unsigned long bit_cap) {
  if (N < 1) throw std::invalid_argument("partial_sum: N must be >= 1");
  PartialSum ps;
  ps.k = k;
  ps.N = N;
  ps.value = 0;
  for (long n = 1; n <= N; ++n) {
    Term t = fam.term(k, n);
    MaterializeResult m = materialize(t.a, bit_cap);
    if (m.too_large()) {
      std::ostringstream os;
      os << "partial_sum: |a_{" << k << "," << n << "}| needs >= " << m.bit_length_lo.get_str()
         << " bits (cap " << bit_cap << ")";
      throw TooLargeError(os.str(), m.bit_length_lo);
    }
    ps.value += make_rat(t.b, *m.value);
  }
  for (const Int& p : fam.params().primes.primes_for_checks(fam.params().primes_checked)) {
    ps.denominator_valuations.emplace_back(p, nu_p_int(ps.value.get_den(), p).finite());
  }
  return ps;
}

ValuationResult valuation_of_partial_sum(const SeriesFamily& fam, int k, long N, const Int& p) {
  ValuationResult r;
  std::vector<Int> vals = fam.valuations(k, p, N);
  Int mx = vals[0];
  for (long n = 2; n <= N; ++n) mx = std::max(mx, vals[n - 1]);
  long mult = 0, arg = 0;
  for (long n = 1; n <= N; ++n)
    if (vals[n - 1] == mx) {
      ++mult;
      arg = n;
    }
  r.max_valuation = mx;
  r.argmax = arg;
  if (mult != 1) {
    r.failed_hypothesis = "hkl1-uniqueness: argmax of nu_p(a_{k,n}) attained " +
                          std::to_string(mult) + " times for n<=" + std::to_string(N);
    return r;
  }
  if (!(mx > 0)) {
    r.failed_hypothesis = "max-positive: max nu_p(a_{k,n}) is 0 at N=" + std::to_string(N) +
                          " (hkl3-type positivity required)";
    return r;
  }
  for (long n = 1; n <= N; ++n) {
    Term t = fam.term(k, n);
    if (vals[n - 1] > 0 && nu_p_int(t.b, p) > ExtNat(0)) {
      r.failed_hypothesis = "p-coprimality: p | gcd(a_{k,n}, b_{k,n}) at n=" + std::to_string(n);
      return r;
    }
  }
  r.value = -mx;
  return r;
}

}  // namespace qindep
