#pragma once

#include <qindep/series.hpp>

namespace qindep {

// Finite-horizon checkers for the hypotheses of the main theorems. All are
// exact-conservative: WITNESSED and FALSIFIED are only reported when the
// integer/bracket arithmetic proves them; limit-type conditions use the
// configured growth heuristic and are never FALSIFIED.

// Unique argmax of nu_p(a_{k,n}) over n <= N, for every N in the window.
CheckReport check_hkl1(const SeriesFamily& fam, int k, const Int& p, long window_lo,
                       long window_hi);

// g(N) = max nu_p(a_{k,n}) - d * max nu_p(a_{k-1,n}) unbounded-looking.
CheckReport check_hkl2(const SeriesFamily& fam, int k, const Int& p, long H);

// Strict inequality max nu_p(a_{k,n}) > d * max nu_p(a_{k-1,n}) on a window.
CheckReport check_hkl3(const SeriesFamily& fam, int k, const Int& p, long window_lo,
                       long window_hi);

// r(N) = max nu_p(a_{k,n}) / (1 + max nu_p(a_{k-1,n})) unbounded-looking.
CheckReport check_np_ratio(const SeriesFamily& fam, int k, const Int& p, long H);

// n^(1+eps) <= a_n <= a_{n+1} for n <= H.
CheckReport check_hkl4(const SeriesFamily& fam, long H);

enum class EnvelopeMode { HKL5, HKL5P };

// a_n 2^{-(log2 a_n)^kappa} <= |a_{k,n}| <= max{a_n 2^{(log2 a_n)^kappa}, B_n}
// with B_n = 2^{n^{-3}(Kd+1)^n} (HKL5) or 2^{A^n} (HKL5P).
CheckReport check_hkl5(const SeriesFamily& fam, long H, EnvelopeMode mode);

// |b_{k,n}| <= 2^{(log2 a_n)^kappa}.
CheckReport check_hkl6(const SeriesFamily& fam, long H);

// Bundle of hkl4 + hkl5/hkl5' + hkl6 as children; overall = worst status.
CheckReport check_envelope(const SeriesFamily& fam, long H, EnvelopeMode mode);

// y_n = log2(a_n)/B^n; WITNESSED when max over (H/2,H] exceeds the growth
// factor times max over [1,H/2].
CheckReport check_limsup(const SeriesFamily& fam, const Int& base, long H,
                         const std::string& condition_id = "hkl7");

// p does not divide gcd(a_{k,n}, b_{k,n}) for n <= H (exact).
CheckReport check_gcd_coprime(const SeriesFamily& fam, int k, const Int& p, long H);

// limsup nu_p(a_{k,n}) = infinity, growth-heuristic surrogate.
CheckReport check_nu_unbounded(const SeriesFamily& fam, int k, const Int& p, long H);

// nu_p(a_m) != nu_p(a_n) or the common value <= C, for all m < n <= H.
CheckReport check_distinct_or_bounded(const SeriesFamily& fam, int k, const Int& p, long H,
                                      const Int& C);

// nu_p(a_n) bounded (max stabilized across half/full horizon) and the max
// attained exactly once.
CheckReport check_bounded_max_unique(const SeriesFamily& fam, int k, const Int& p, long H);

}  // namespace qindep
