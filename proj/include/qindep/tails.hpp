#pragma once

#include <qindep/certify.hpp>

namespace qindep {

enum class TailKind { Gamma42, Gamma43 };  // a_N^-gamma vs 2^((log2 a_N)^Gamma)/a_N shapes

struct TailBound {
  long N = 0;
  TailKind kind = TailKind::Gamma42;
  long cutoff = 0;          // exact summation up to this index
  Dyadic bound;             // certified upper bound on sum_{n>=N} |b_n/a_n|
  Dyadic empirical;         // truncated exact sum, rounded down
  Rat exponent_observed;    // fitted gamma/Gamma, OBSERVED only, never used to certify
};

// Certified upper bound via exact terms to a cutoff plus a declared-shape
// majorant beyond it. Throws when the family declares no tail shape or a
// kind-specific hypothesis fails.
TailBound tail_bound(const SeriesFamily& fam, int k, long N, TailKind kind, long extra_terms = 8);

struct ZStatistic {
  long N = 0;
  Int M = 0;
  Rat c;
  Dyadic upper;             // sound upper bracket of Z_N
  std::optional<Rat> value; // materialized when within the bit cap
};

// Z_N = 2^{N^2 (log2 a_{N-1})^c} (prod_{n<N} a_n)^{M+1} sum_{n>=N} |b_n/a_n|,
// rounded up. Uses the k=1 sequence.
ZStatistic z_statistic(const SeriesFamily& fam, const Int& M, const Rat& c, long N,
                       long tail_cutoff_extra = 8, unsigned long bit_cap = 1ul << 20);

struct GapCheck {
  long N = 0;
  Dyadic lower;          // certified lower bound on |P(alpha_N)| (integrality route)
  Dyadic rhs;            // C * certified tail majorant
  Rat lipschitz;         // the constant C used
  bool holds = false;    // lower > rhs
};

// The analytic inequality at one N: integrality lower bound vs Lipschitz tail
// majorant. Throws if the envelope hypotheses are falsified up to N or no
// tail majorant is available.
GapCheck erdos_gap_check(const SeriesFamily& fam, const IntPolynomial& P, long N,
                         long extra_terms = 8);

// All N in (k0, H] satisfying both displayed inequalities (sound bracketing
// of the right-hand sides; ties excluded).
std::vector<long> corollary_witnesses(const SeriesFamily& fam, const Int& M, long k0, long H);

}  // namespace qindep
