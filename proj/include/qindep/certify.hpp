#pragma once

#include <qindep/dyadic.hpp>
#include <qindep/poly.hpp>
#include <qindep/series.hpp>

#include <optional>

namespace qindep {

// Materialization refused: the value's bit length exceeds the cap.
class TooLargeError : public std::runtime_error {
 public:
  TooLargeError(std::string what, Int bits_lo)
      : std::runtime_error(std::move(what)), bit_length_lo(std::move(bits_lo)) {}
  Int bit_length_lo;
};

struct PartialSum {
  int k = 0;
  long N = 0;
  Rat value;
  // nu_p of the reduced denominator, for the family's checked primes.
  std::vector<std::pair<Int, Int>> denominator_valuations;
};

// Exact alpha_{k,N} = sum_{n<=N} b_{k,n}/a_{k,n}. Throws TooLargeError when a
// term exceeds the bit cap (caller falls back to valuation mode).
PartialSum partial_sum(const SeriesFamily& fam, int k, long N, unsigned long bit_cap);

// nu_p(alpha_{k,N}) = -max_{n<=N} nu_p(a_{k,n}), valid only under the proof's
// preconditions; failure names the violated hypothesis.
struct ValuationResult {
  std::optional<Int> value;
  std::string failed_hypothesis;  // empty on success
  Int max_valuation = 0;
  long argmax = 0;
};
ValuationResult valuation_of_partial_sum(const SeriesFamily& fam, int k, long N, const Int& p);

enum class Verdict { NONVANISHING_CERTIFIED, INCONCLUSIVE };
std::string to_string(Verdict v);

struct CertificateRow {
  Exponents monomial;
  Int coeff;
  Int nu;  // nu_p(C_{i_1..i_K}), exact
};

struct Certificate {
  std::string family;
  long N = 0;
  Int p = 0;
  std::string poly_text;
  Exponents leading;
  Int leading_coeff;
  std::vector<CertificateRow> rows;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::string reason;  // why INCONCLUSIVE
  bool crosscheck_feasible = false;
  std::optional<Rat> crosscheck_value;
  bool crosscheck_nonzero = false;
};

struct CertifyOptions {
  unsigned long bit_cap = 1ul << 20;
  long prime_scan_cap = 10000;
  bool do_crosscheck = true;
  std::optional<int> max_degree;  // enforce deg P <= this when set
};

Certificate dominance_certificate(const SeriesFamily& fam, const IntPolynomial& P, long N,
                                  const CertifyOptions& opts = {});

struct LinearScanReport {
  long N = 0;
  long height = 0;
  Int p_bound;
  long certified = 0;
  long inconclusive = 0;
  std::vector<Certificate> certificates;
};

// Dominance certificates for every P = q*x - p with 1 <= q <= height,
// |p| <= height * ceil(|alpha_{1,N}| + 1). K = 1 families only.
LinearScanReport linear_scan(const SeriesFamily& fam, long height, long N,
                             const CertifyOptions& opts = {});

// ---- bulk sweeps (data-parallel surface; serial reference + OpenMP) ----

struct SweepCell {
  bool certified = false;
  int crosscheck = -1;  // -1 infeasible, 1 nonzero, 0 zero
};

struct SweepSpec {
  const SeriesFamily* fam = nullptr;
  std::vector<IntPolynomial> polys;
  std::vector<long> horizons;
  CertifyOptions opts;
};

// Results indexed [poly * horizons.size() + horizon_idx]; both runners
// produce identical output.
std::vector<SweepCell> run_sweep_serial(const SweepSpec& spec);
std::vector<SweepCell> run_sweep_parallel(const SweepSpec& spec, int jobs);

}  // namespace qindep
