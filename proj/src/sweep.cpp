#include <omp.h>
#include <qindep/certify.hpp>
#include <qindep/nu.hpp>

namespace qindep {

// Certificate sweeps are the artifact's data-parallel surface: every (P, N)
// cell is independent. The serial runner is the reference; the OpenMP runner
// must produce bit-identical results (cells are written into preallocated
// slots, shared state is read-only).

namespace {

constexpr unsigned long kQ = 2305843009213693951ul;  // 2^61 - 1, prime

Int divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct NContext {
  Int p;
  std::vector<std::optional<Int>> neg_val;  // nu_p(alpha_{k,N}) when provable
  bool sums_feasible = false;
  std::vector<Rat> alpha;
  // Monomial values over a common denominator: exact numerators and their
  // residues mod kQ (nonzero residue certifies a nonzero value).
  std::map<Exponents, Int, ColexLess> num;
  std::map<Exponents, unsigned long, ColexLess> num_modq;
};

NContext prepare_context(const SeriesFamily& fam, long N, const std::vector<IntPolynomial>& polys,
                         const CertifyOptions& opts) {
  NContext ctx;
  const PrimeSpec& spec = fam.params().primes;
  if (!spec.single)
    throw std::invalid_argument("sweep: generator-prime families need per-cell certificates");
  ctx.p = spec.p;
  int K = fam.K();
  for (int k = 1; k <= K; ++k) {
    ValuationResult v = valuation_of_partial_sum(fam, k, N, ctx.p);
    ctx.neg_val.push_back(v.value ? std::optional<Int>(*v.value) : std::nullopt);
  }
  if (!opts.do_crosscheck) return ctx;
  try {
    for (int k = 1; k <= K; ++k) ctx.alpha.push_back(partial_sum(fam, k, N, opts.bit_cap).value);
    ctx.sums_feasible = true;
  } catch (const TooLargeError&) {
    return ctx;
  }
  std::map<Exponents, Rat, ColexLess> values;
  Int common_den = 1;
  for (const IntPolynomial& P : polys)
    for (const auto& [e, c] : P.terms())
      if (!values.count(e)) {
        Rat v(1);
        for (int k = 0; k < K; ++k)
          for (unsigned t = 0; t < e[k]; ++t) v *= ctx.alpha[k];
        Int l;
        mpz_lcm(l.get_mpz_t(), common_den.get_mpz_t(), v.get_den().get_mpz_t());
        common_den = std::move(l);
        values.emplace(e, std::move(v));
      }
  for (const auto& [e, v] : values) {
    Int n = v.get_num() * divexact(common_den, v.get_den());
    Int m = n % Int(kQ);
    if (m < 0) m += Int(kQ);
    ctx.num_modq[e] = m.get_ui();
    ctx.num.emplace(e, std::move(n));
  }
  return ctx;
}

SweepCell evaluate_cell(const IntPolynomial& P, const NContext& ctx) {
  SweepCell cell;
  auto [lead, lead_c] = colex_leading(P);
  Int vcj = nu_p_int(lead_c, ctx.p).finite();
  bool ok = true;
  for (std::size_t k = 0; k < ctx.neg_val.size() && ok; ++k)
    if (lead[k] > 0 && !ctx.neg_val[k]) ok = false;
  for (auto it = P.terms().begin(); ok && it != P.terms().end(); ++it) {
    const auto& [e, c] = *it;
    if (e == lead) continue;
    Int nu = nu_p_int(c, ctx.p).finite() - vcj;
    for (std::size_t k = 0; k < ctx.neg_val.size(); ++k) {
      if (e[k] == lead[k]) continue;
      if (!ctx.neg_val[k]) {
        ok = false;
        break;
      }
      nu += (Int(e[k]) - Int(lead[k])) * *ctx.neg_val[k];
    }
    if (ok && !(nu > 0)) ok = false;
  }
  cell.certified = ok;

  if (ctx.sums_feasible) {
    unsigned long acc = 0;
    for (const auto& [e, c] : P.terms()) {
      unsigned long cm = mpz_fdiv_ui(c.get_mpz_t(), kQ);
      acc = (acc + static_cast<unsigned long>(
                       (static_cast<unsigned __int128>(cm) * ctx.num_modq.at(e)) % kQ)) %
            kQ;
    }
    if (acc != 0) {
      cell.crosscheck = 1;  // nonzero mod q certifies nonzero
    } else {
      Int exact = 0;
      for (const auto& [e, c] : P.terms()) exact += c * ctx.num.at(e);
      cell.crosscheck = exact != 0 ? 1 : 0;
    }
  } else {
    cell.crosscheck = -1;
  }
  return cell;
}

}  // namespace

std::vector<SweepCell> run_sweep_serial(const SweepSpec& spec) {
  std::vector<NContext> contexts;
  contexts.reserve(spec.horizons.size());
  for (long N : spec.horizons) contexts.push_back(prepare_context(*spec.fam, N, spec.polys, spec.opts));
  std::vector<SweepCell> out(spec.polys.size() * spec.horizons.size());
  for (std::size_t pi = 0; pi < spec.polys.size(); ++pi)
    for (std::size_t ni = 0; ni < spec.horizons.size(); ++ni)
      out[pi * spec.horizons.size() + ni] = evaluate_cell(spec.polys[pi], contexts[ni]);
  return out;
}

std::vector<SweepCell> run_sweep_parallel(const SweepSpec& spec, int jobs) {
  std::vector<NContext> contexts;
  contexts.reserve(spec.horizons.size());
  for (long N : spec.horizons) contexts.push_back(prepare_context(*spec.fam, N, spec.polys, spec.opts));
  std::vector<SweepCell> out(spec.polys.size() * spec.horizons.size());
  long total = static_cast<long>(out.size());
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long idx = 0; idx < total; ++idx) {
    std::size_t pi = static_cast<std::size_t>(idx) / spec.horizons.size();
    std::size_t ni = static_cast<std::size_t>(idx) % spec.horizons.size();
    out[idx] = evaluate_cell(spec.polys[pi], contexts[ni]);
  }
  return out;
}

}  // namespace qindep
