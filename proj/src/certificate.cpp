#include <qindep/certify.hpp>
#include <qindep/nu.hpp>

#include <sstream>

namespace qindep {

std::string to_string(Verdict v) {
  return v == Verdict::NONVANISHING_CERTIFIED ? "NONVANISHING_CERTIFIED" : "INCONCLUSIVE";
}

namespace {

// Prime for eq:nupci: the single family prime, or the first generator prime
// with nu_p(leading coefficient) = 0 (at most #prime-divisors + 1 scanned).
Int select_prime(const SeriesFamily& fam, const Int& leading_coeff, long scan_cap,
                 std::string* why) {
  const PrimeSpec& spec = fam.params().primes;
  if (spec.single) {
    *why = "family prime";
    return spec.p;
  }
  for (long i = 1; i <= scan_cap; ++i) {
    Int p = spec.nth(i);
    if (nu_p_int(leading_coeff, p) == ExtNat(0)) {
      *why = "first generator prime not dividing the leading coefficient";
      return p;
    }
  }
  throw std::domain_error("dominance_certificate: prime scan cap exhausted");
}

}  // namespace

Certificate dominance_certificate(const SeriesFamily& fam, const IntPolynomial& P, long N,
                                  const CertifyOptions& opts) {
  if (P.is_zero()) throw std::invalid_argument("dominance_certificate: zero polynomial");
  if (P.nvars() != fam.K())
    throw std::invalid_argument("dominance_certificate: polynomial arity != family K");
  if (opts.max_degree && P.degree() > *opts.max_degree)
    throw std::invalid_argument("dominance_certificate: deg P exceeds configured d");

  Certificate cert;
  cert.family = fam.name();
  cert.N = N;
  cert.poly_text = P.str();
  auto [lead, lead_c] = colex_leading(P);
  cert.leading = lead;
  cert.leading_coeff = lead_c;
  std::string why;
  cert.p = select_prime(fam, lead_c, opts.prime_scan_cap, &why);

  // nu_p(alpha_{k,N}) for every k the certificate touches.
  int K = fam.K();
  std::vector<std::optional<Int>> neg_val(K);
  std::vector<std::string> fail(K);
  for (int k = 1; k <= K; ++k) {
    ValuationResult v = valuation_of_partial_sum(fam, k, N, cert.p);
    if (v.value)
      neg_val[k - 1] = *v.value;
    else
      fail[k - 1] = v.failed_hypothesis;
  }

  ExtNat vcj = nu_p_int(lead_c, cert.p);
  bool ok = true;
  std::string reason;
  for (const auto& [e, c] : P.terms()) {
    if (e == lead) continue;
    Int nu = nu_p_int(c, cert.p).finite() - vcj.finite();
    bool row_ok = true;
    for (int k = 1; k <= K; ++k) {
      if (e[k - 1] == lead[k - 1]) continue;
      if (!neg_val[k - 1]) {
        reason = "valuation of alpha_{" + std::to_string(k) + ",N} unavailable: " + fail[k - 1];
        row_ok = false;
        break;
      }
      nu += (Int(e[k - 1]) - Int(lead[k - 1])) * *neg_val[k - 1];
    }
    if (!row_ok) {
      ok = false;
      break;
    }
    cert.rows.push_back({e, c, nu});
    if (!(nu > 0)) {
      ok = false;
      reason = "nu_p(C_i) <= 0 for monomial " + IntPolynomial::monomial(e, c).str();
    }
  }
  if (ok) {
    // Leading term itself must be nonzero: alpha_k != 0 for k with j_k > 0.
    for (int k = 1; k <= K && ok; ++k) {
      if (lead[k - 1] > 0 && !neg_val[k - 1]) {
        ok = false;
        reason = "leading monomial uses alpha_{" + std::to_string(k) +
                 ",N} with unavailable valuation: " + fail[k - 1];
      }
    }
  }
  cert.verdict = ok ? Verdict::NONVANISHING_CERTIFIED : Verdict::INCONCLUSIVE;
  cert.reason = ok ? "" : reason;

  if (opts.do_crosscheck) {
    try {
      std::vector<Rat> alpha;
      for (int k = 1; k <= K; ++k) alpha.push_back(partial_sum(fam, k, N, opts.bit_cap).value);
      cert.crosscheck_feasible = true;
      cert.crosscheck_value = P.evaluate(alpha);
      cert.crosscheck_nonzero = *cert.crosscheck_value != 0;
      if (cert.verdict == Verdict::NONVANISHING_CERTIFIED && !cert.crosscheck_nonzero)
        throw std::logic_error("certificate soundness violation: certified value is zero");
    } catch (const TooLargeError&) {
      cert.crosscheck_feasible = false;
    }
  }
  return cert;
}

LinearScanReport linear_scan(const SeriesFamily& fam, long height, long N,
                             const CertifyOptions& opts) {
  if (fam.K() != 1) throw std::invalid_argument("linear_scan: requires a K=1 family");
  if (height < 0) throw std::invalid_argument("linear_scan: height must be >= 0");
  LinearScanReport rep;
  rep.N = N;
  rep.height = height;
  if (height == 0) {
    rep.p_bound = 0;
    return rep;
  }
  // |p| <= height * ceil(|alpha_{1,N}| + 1), alpha bounded by a dyadic sum.
  Dyadic mag = Dyadic::zero();
  for (long n = 1; n <= N; ++n) {
    Term t = fam.term(1, n);
    mag = mag.add_up(div_up(::abs(t.b), t.a, 64), 96);
  }
  Int ceil_bound = 2;  // |alpha|+1 rounded up, at least 2
  if (!mag.is_zero()) {
    std::optional<RatInterval> lg = mag.log2(16);
    Int upper_pow = rat_ceil(lg->hi);
    if (upper_pow > 30) throw std::domain_error("linear_scan: partial sum implausibly large");
    Int bound = pow2(upper_pow < 0 ? Int(0) : upper_pow) + 1;
    ceil_bound = bound;
  }
  rep.p_bound = Int(height) * ceil_bound;

  for (long q = 1; q <= height; ++q) {
    for (Int p = -rep.p_bound; p <= rep.p_bound; ++p) {
      IntPolynomial P(1);
      P.add_term({1}, Int(q));
      P.add_term({0}, -p);
      Certificate c = dominance_certificate(fam, P, N, opts);
      if (c.verdict == Verdict::NONVANISHING_CERTIFIED)
        ++rep.certified;
      else
        ++rep.inconclusive;
      rep.certificates.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace qindep
