#include <qindep/log2exact.hpp>

namespace qindep {

namespace {

// True value stays inside [lo, hi]/2^G throughout; rounding is directed.
void halve(Int& lo, Int& hi) {
  lo = floor_div(lo, 2);
  hi = ceil_div(hi, 2);
}

}  // namespace

RatInterval log2_int(const Int& x, unsigned frac_bits) {
  if (x < 1) throw std::invalid_argument("log2_int: x must be >= 1");
  if (x == 1) return RatInterval::point(Rat(0));
  const unsigned long e = bit_length(x) - 1;
  Int p2e = pow_ui(2, e);
  if (x == p2e) return RatInterval::point(Rat(Int(e)));

  // Fixed-point mantissa y = x / 2^e in (1, 2), scaled by 2^G.
  const unsigned G = frac_bits + 16;
  Int scale = pow_ui(2, G);
  Int num = x * scale;
  Int lo = floor_div(num, p2e);
  Int hi = ceil_div(num, p2e);

  Int two_scale = scale * 2;
  Int frac = 0;
  unsigned emitted = 0;
  for (unsigned i = 0; i < frac_bits; ++i) {
    lo = floor_div(lo * lo, scale);
    hi = ceil_div(hi * hi, scale);
    if (lo >= two_scale) {
      frac = frac * 2 + 1;
      halve(lo, hi);
    } else if (hi < two_scale) {
      frac = frac * 2;
    } else {
      break;  // enclosure straddles 2; bracket emitted so far is still valid
    }
    ++emitted;
  }

  Int denom = pow_ui(2, emitted);
  Rat lo_r = Rat(Int(e)) + make_rat(frac, denom);
  Rat hi_r = Rat(Int(e)) + make_rat(frac + 1, denom);
  return {lo_r, hi_r};
}

RatInterval log2_rat(const Rat& q, unsigned frac_bits) {
  if (q <= 0) throw std::invalid_argument("log2_rat: q must be > 0");
  if (q == 1) return RatInterval::point(Rat(0));
  return log2_int(q.get_num(), frac_bits) - log2_int(q.get_den(), frac_bits);
}

Int pow_frac_floor(const Rat& x, unsigned long u, unsigned long v) {
  if (x < 0) throw std::invalid_argument("pow_frac_floor: negative base");
  if (v == 0) throw std::invalid_argument("pow_frac_floor: zero root index");
  Int num = pow_ui(Int(x.get_num()), u);
  Int den = pow_ui(Int(x.get_den()), u);
  Int s = iroot_floor(floor_div(num, den), v);
  auto le_y = [&](const Int& c) { return pow_ui(c, v) * den <= num; };
  while (!le_y(s) && s > 0) --s;
  while (le_y(s + 1)) ++s;
  return s;
}

Int pow_frac_ceil(const Rat& x, unsigned long u, unsigned long v) {
  Int s = pow_frac_floor(x, u, v);
  Int num = pow_ui(Int(x.get_num()), u);
  Int den = pow_ui(Int(x.get_den()), u);
  if (pow_ui(s, v) * den == num) return s;
  return s + 1;
}

IntBracket pow_kappa_bracket(const RatInterval& log2val, const Rat& kappa) {
  if (kappa <= 0 || kappa >= 1) throw std::invalid_argument("pow_kappa_bracket: kappa must be in (0,1)");
  if (!fits_ulong(kappa.get_num()) || !fits_ulong(kappa.get_den()))
    throw std::invalid_argument("pow_kappa_bracket: kappa too intricate");
  unsigned long u = Int(kappa.get_num()).get_ui();
  unsigned long v = Int(kappa.get_den()).get_ui();
  Rat lo = log2val.lo < 0 ? Rat(0) : log2val.lo;
  Rat hi = log2val.hi < 0 ? Rat(0) : log2val.hi;
  return {pow_frac_floor(lo, u, v), pow_frac_ceil(hi, u, v)};
}

}  // namespace qindep
