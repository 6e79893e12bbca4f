#pragma once

#include <qindep/ints.hpp>

namespace qindep {

// Closed rational interval [lo, hi]. Used for rigorous enclosures of log2
// values: every bound the checkers derive from an interval is exact-
// conservative (an inequality is asserted only if the enclosure proves it).
struct RatInterval {
  Rat lo, hi;

  RatInterval() = default;
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  static RatInterval point(const Rat& v) { return {v, v}; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  // Scale by a non-negative rational.
  RatInterval scaled(const Rat& m) const {
    if (m < 0) throw std::invalid_argument("RatInterval::scaled: negative multiplier");
    return {lo * m, hi * m};
  }
  Rat width() const { return hi - lo; }
};

// Enclosure of log2(x) for integer x >= 1, with at least frac_bits fractional
// bits of precision (fixed-point repeated squaring; no floating point).
RatInterval log2_int(const Int& x, unsigned frac_bits);

// Enclosure of log2(q) for rational q > 0.
RatInterval log2_rat(const Rat& q, unsigned frac_bits);

// Largest integer s >= 0 with s^v <= x^u (x >= 0 rational, kappa = u/v).
// I.e. floor(x^(u/v)). Companion ceil version rounds the other way.
Int pow_frac_floor(const Rat& x, unsigned long u, unsigned long v);
Int pow_frac_ceil(const Rat& x, unsigned long u, unsigned long v);

// Integer bracket [lo, hi] ∋ (log2val)^kappa given an enclosure of log2val
// and kappa = u/v in (0,1). Negative log enclosures clamp at 0.
struct IntBracket {
  Int lo, hi;
};
IntBracket pow_kappa_bracket(const RatInterval& log2val, const Rat& kappa);

}  // namespace qindep
