#include <qindep/checks.hpp>
#include <qindep/log2exact.hpp>
#include <qindep/nu.hpp>

#include <sstream>

namespace qindep {

namespace {

std::vector<Int> prefix_max(const std::vector<Int>& v) {
  std::vector<Int> out(v.size());
  Int cur = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i] > cur) cur = v[i];
    out[i] = cur;
  }
  return out;
}

// Valuations of a_{k-1,n}, honoring the a_{0,n} = 1 convention.
std::vector<Int> valuations_below(const SeriesFamily& fam, int k, const Int& p, long H) {
  if (k == 1) return std::vector<Int>(H, Int(0));
  return fam.valuations(k - 1, p, H);
}

// Spec heuristic for "-> infinity" statistics: the value at H strictly
// dominates every value up to H/2 and clears the threshold.
CheckStatus growth_status(const std::vector<Rat>& g, long H, const Rat& threshold) {
  const Rat& at_h = g[H - 1];
  if (at_h < threshold) return CheckStatus::UNKNOWN;
  for (long N = 1; N <= H / 2; ++N)
    if (!(at_h > g[N - 1])) return CheckStatus::UNKNOWN;
  return CheckStatus::WITNESSED;
}

FactoredInteger pow2_factored(const Int& e) {
  if (e == 0) return FactoredInteger();
  return FactoredInteger(1, {{Int(2), e}}, 1);
}

// x <= 2^e, exact, without materializing 2^e.
bool int_le_pow2(const Int& x_abs, const Int& e) {
  if (e < 0) return false;  // x >= 1
  Int bl(bit_length(x_abs));
  if (bl <= e) return true;
  if (bl == e + 1) return x_abs == pow2(e);
  return false;
}

bool int_gt_pow2(const Int& x_abs, const Int& e) { return !int_le_pow2(x_abs, e); }

}  // namespace

CheckReport check_hkl1(const SeriesFamily& fam, int k, const Int& p, long window_lo,
                       long window_hi) {
  CheckReport rep;
  rep.condition = "hkl1";
  rep.horizon = window_hi;
  rep.window_lo = window_lo;
  rep.window_hi = window_hi;
  if (window_lo < 1 || window_lo > window_hi)
    throw std::invalid_argument("check_hkl1: bad window");
  std::vector<Int> vals = fam.valuations(k, p, window_hi);
  long argmax_at_h = 0;
  for (long N = window_lo; N <= window_hi; ++N) {
    Int mx = vals[0];
    for (long n = 2; n <= N; ++n) mx = std::max(mx, vals[n - 1]);
    long mult = 0;
    long arg = 0;
    for (long n = 1; n <= N; ++n)
      if (vals[n - 1] == mx) {
        ++mult;
        arg = n;
      }
    rep.stats.emplace_back(N, std::to_string(mult));
    if (mult != 1) {
      rep.status = CheckStatus::FALSIFIED;
      rep.witnesses = {N};
      std::ostringstream os;
      os << "argmax of nu_" << p.get_str() << "(a_{" << k << ",n}) over n<=" << N << " attained "
         << mult << " times";
      rep.detail = os.str();
      return rep;
    }
    if (N == window_hi) argmax_at_h = arg;
  }
  rep.status = CheckStatus::WITNESSED;
  rep.witnesses = {argmax_at_h};
  rep.detail = "unique argmax for every N in window; argmax at horizon n=" +
               std::to_string(argmax_at_h);
  return rep;
}

CheckReport check_hkl2(const SeriesFamily& fam, int k, const Int& p, long H) {
  CheckReport rep;
  rep.condition = "hkl2";
  rep.horizon = H;
  std::vector<Int> mk = prefix_max(fam.valuations(k, p, H));
  std::vector<Int> mk1 = prefix_max(valuations_below(fam, k, p, H));
  std::vector<Rat> g;
  g.reserve(H);
  for (long N = 1; N <= H; ++N) {
    Int v = mk[N - 1] - Int(fam.params().d) * mk1[N - 1];
    g.emplace_back(v);
    rep.stats.emplace_back(N, v.get_str());
  }
  rep.status = growth_status(g, H, fam.params().growth_threshold);
  rep.detail = rep.status == CheckStatus::WITNESSED
                   ? "g(H) dominates first half and clears threshold"
                   : "growth heuristic not met (limit claim cannot be falsified at finite horizon)";
  return rep;
}

CheckReport check_hkl3(const SeriesFamily& fam, int k, const Int& p, long window_lo,
                       long window_hi) {
  CheckReport rep;
  rep.condition = "hkl3";
  rep.horizon = window_hi;
  rep.window_lo = window_lo;
  rep.window_hi = window_hi;
  std::vector<Int> mk = prefix_max(fam.valuations(k, p, window_hi));
  std::vector<Int> mk1 = prefix_max(valuations_below(fam, k, p, window_hi));
  for (long N = window_lo; N <= window_hi; ++N) {
    Int lhs = mk[N - 1];
    Int rhs = Int(fam.params().d) * mk1[N - 1];
    rep.stats.emplace_back(N, lhs.get_str() + " vs " + rhs.get_str());
    if (!(lhs > rhs)) {
      rep.status = CheckStatus::FALSIFIED;
      rep.witnesses = {N};
      rep.detail = "max nu_p(a_{k,n}) <= d*max nu_p(a_{k-1,n}) at N=" + std::to_string(N);
      return rep;
    }
  }
  rep.status = CheckStatus::WITNESSED;
  rep.detail = "strict dominance on the whole window";
  return rep;
}

CheckReport check_np_ratio(const SeriesFamily& fam, int k, const Int& p, long H) {
  CheckReport rep;
  rep.condition = "np-ratio";
  rep.horizon = H;
  std::vector<Int> mk = prefix_max(fam.valuations(k, p, H));
  std::vector<Int> mk1 = prefix_max(valuations_below(fam, k, p, H));
  std::vector<Rat> r;
  r.reserve(H);
  for (long N = 1; N <= H; ++N) {
    Rat v = make_rat(mk[N - 1], 1 + mk1[N - 1]);
    r.push_back(v);
    rep.stats.emplace_back(N, rat_brief(v));
  }
  rep.status = growth_status(r, H, fam.params().growth_threshold);
  rep.detail = rep.status == CheckStatus::WITNESSED
                   ? "ratio statistic dominates first half and clears threshold"
                   : "growth heuristic not met";
  return rep;
}

CheckReport check_hkl4(const SeriesFamily& fam, long H) {
  CheckReport rep;
  rep.condition = "hkl4";
  rep.horizon = H;
  const Rat& eps = fam.params().epsilon;
  if (eps <= 0) throw std::invalid_argument("check_hkl4: epsilon must be positive");
  Int u = eps.get_num(), v = eps.get_den();
  bool undecided = false;
  for (long n = 1; n <= H; ++n) {
    FactoredInteger an = fam.envelope(n);
    // n^{1+eps} <= a_n  <=>  n^{v+u} <= a_n^v
    if (!fits_ulong(u + v)) throw std::invalid_argument("check_hkl4: epsilon too large");
    FactoredInteger lhs = FactoredInteger::from_int(pow_ui(Int(n), Int(u + v).get_ui()));
    Cmp c = compare_factored(lhs, an.pow(v));
    if (c == Cmp::Greater) {
      rep.status = CheckStatus::FALSIFIED;
      rep.witnesses = {n};
      rep.detail = "n^(1+eps) > a_n at n=" + std::to_string(n);
      return rep;
    }
    if (c == Cmp::Undecided) undecided = true;
    if (n < H) {
      Cmp m = compare_factored(an, fam.envelope(n + 1));
      if (m == Cmp::Greater) {
        rep.status = CheckStatus::FALSIFIED;
        rep.witnesses = {n};
        rep.detail = "a_n > a_{n+1} at n=" + std::to_string(n);
        return rep;
      }
      if (m == Cmp::Undecided) undecided = true;
    }
  }
  rep.status = undecided ? CheckStatus::UNKNOWN : CheckStatus::WITNESSED;
  rep.detail = undecided ? "bracketing could not decide some comparison" : "holds for all n <= H";
  return rep;
}

namespace {

struct TriCmp {
  bool proven;      // inequality certainly holds
  bool refuted;     // inequality certainly fails
};

// x <= y, through sound directions only.
TriCmp le_via(Cmp c) { return {c == Cmp::Less || c == Cmp::Equal, c == Cmp::Greater}; }

}  // namespace

CheckReport check_hkl5(const SeriesFamily& fam, long H, EnvelopeMode mode) {
  CheckReport rep;
  rep.condition = mode == EnvelopeMode::HKL5 ? "hkl5" : "hkl5p";
  rep.horizon = H;
  const SeriesParams& ps = fam.params();
  bool undecided = false;
  for (long n = 1; n <= H; ++n) {
    FactoredInteger an = fam.envelope(n);
    RatInterval lg = log2_factored(an, 32);
    IntBracket s = pow_kappa_bracket(lg, ps.kappa);
    // second upper branch exponent
    Int e_lo, e_hi;
    if (mode == EnvelopeMode::HKL5P) {
      e_lo = e_hi = pow_z(ps.A, Int(n));
    } else {
      Int base = pow_z(Int(ps.K) * Int(ps.d) + 1, Int(n));
      Int n3 = Int(n) * Int(n) * Int(n);
      e_lo = floor_div(base, n3);
      e_hi = ceil_div(base, n3);
    }
    for (int k = 1; k <= ps.K; ++k) {
      FactoredInteger akn = fam.term(k, n).a.abs();
      // lower: a_n <= |a_{k,n}| * 2^((log2 a_n)^kappa)
      TriCmp lower_w = le_via(compare_factored(an, mul_factored(akn, pow2_factored(s.lo))));
      TriCmp lower_f = le_via(compare_factored(an, mul_factored(akn, pow2_factored(s.hi))));
      if (lower_f.refuted) {
        rep.status = CheckStatus::FALSIFIED;
        rep.witnesses = {n};
        rep.detail = "lower envelope bound fails at n=" + std::to_string(n) +
                     ", k=" + std::to_string(k);
        return rep;
      }
      if (!lower_w.proven) undecided = true;
      // upper: |a_{k,n}| <= a_n*2^(...) or |a_{k,n}| <= 2^{E_n}
      TriCmp b1_w = le_via(compare_factored(akn, mul_factored(an, pow2_factored(s.lo))));
      TriCmp b1_f = le_via(compare_factored(akn, mul_factored(an, pow2_factored(s.hi))));
      Cmp c2_lo = compare_with_pow2(akn, e_lo);
      Cmp c2_hi = compare_with_pow2(akn, e_hi);
      bool b2_w = (c2_lo == Cmp::Less || c2_lo == Cmp::Equal);
      bool b2_f = (c2_hi == Cmp::Greater);
      if (b1_f.refuted && b2_f) {
        rep.status = CheckStatus::FALSIFIED;
        rep.witnesses = {n};
        rep.detail = "upper envelope bound fails at n=" + std::to_string(n) +
                     ", k=" + std::to_string(k);
        return rep;
      }
      if (!(b1_w.proven || b2_w)) undecided = true;
    }
  }
  rep.status = undecided ? CheckStatus::UNKNOWN : CheckStatus::WITNESSED;
  rep.detail = undecided ? "bracketing could not decide some comparison"
                         : "envelope bounds hold for all n <= H, k <= K";
  return rep;
}

CheckReport check_hkl6(const SeriesFamily& fam, long H) {
  CheckReport rep;
  rep.condition = "hkl6";
  rep.horizon = H;
  bool undecided = false;
  for (long n = 1; n <= H; ++n) {
    RatInterval lg = log2_factored(fam.envelope(n), 32);
    IntBracket s = pow_kappa_bracket(lg, fam.params().kappa);
    for (int k = 1; k <= fam.params().K; ++k) {
      Int b = ::abs(fam.term(k, n).b);
      if (int_gt_pow2(b, s.hi)) {
        rep.status = CheckStatus::FALSIFIED;
        rep.witnesses = {n};
        rep.detail = "|b_{k,n}| > 2^((log2 a_n)^kappa) at n=" + std::to_string(n) +
                     ", k=" + std::to_string(k);
        return rep;
      }
      if (!int_le_pow2(b, s.lo)) undecided = true;
    }
  }
  rep.status = undecided ? CheckStatus::UNKNOWN : CheckStatus::WITNESSED;
  rep.detail = undecided ? "bracketing could not decide some comparison"
                         : "numerator bound holds for all n <= H, k <= K";
  return rep;
}

CheckReport check_envelope(const SeriesFamily& fam, long H, EnvelopeMode mode) {
  CheckReport rep;
  rep.condition = "envelope";
  rep.horizon = H;
  rep.children.push_back(check_hkl4(fam, H));
  rep.children.push_back(check_hkl5(fam, H, mode));
  rep.children.push_back(check_hkl6(fam, H));
  rep.status = CheckStatus::WITNESSED;
  for (const CheckReport& c : rep.children) {
    if (c.status == CheckStatus::FALSIFIED) {
      rep.status = CheckStatus::FALSIFIED;
      rep.witnesses = c.witnesses;
      rep.detail = c.condition + ": " + c.detail;
      return rep;
    }
    if (c.status == CheckStatus::UNKNOWN) rep.status = CheckStatus::UNKNOWN;
  }
  rep.detail = "bundled hkl4/hkl5/hkl6";
  return rep;
}

CheckReport check_limsup(const SeriesFamily& fam, const Int& base, long H,
                         const std::string& condition_id) {
  CheckReport rep;
  rep.condition = condition_id;
  rep.horizon = H;
  if (base < 2) throw std::invalid_argument("check_limsup: base must be >= 2");
  std::vector<RatInterval> y;
  y.reserve(H);
  for (long n = 1; n <= H; ++n) {
    RatInterval lg = log2_factored(fam.envelope(n), 48);
    Rat scale = make_rat(1, pow_z(base, Int(n)));
    y.push_back(lg.scaled(scale));
    rep.stats.emplace_back(n, interval_brief(y.back()));
  }
  long half = H / 2;
  Rat upper_lo(0), lower_hi(0);
  bool first = true;
  for (long n = half + 1; n <= H; ++n) {
    if (first || y[n - 1].lo > upper_lo) upper_lo = y[n - 1].lo;
    first = false;
  }
  first = true;
  for (long n = 1; n <= half; ++n) {
    if (first || y[n - 1].hi > lower_hi) lower_hi = y[n - 1].hi;
    first = false;
  }
  bool witnessed = upper_lo > fam.params().growth_factor * lower_hi && upper_lo > 0;
  rep.status = witnessed ? CheckStatus::WITNESSED : CheckStatus::UNKNOWN;
  rep.detail = witnessed
                   ? "second-half max of log2(a_n)/B^n dominates first half by the growth factor"
                   : "growth heuristic not met (limsup cannot be falsified at finite horizon)";
  return rep;
}

CheckReport check_gcd_coprime(const SeriesFamily& fam, int k, const Int& p, long H) {
  CheckReport rep;
  rep.condition = "p-coprime";
  rep.horizon = H;
  for (long n = 1; n <= H; ++n) {
    Term t = fam.term(k, n);
    ExtNat va = nu_p_factored(t.a, p);
    ExtNat vb = nu_p_int(t.b, p);
    if (va > ExtNat(0) && vb > ExtNat(0)) {
      rep.status = CheckStatus::FALSIFIED;
      rep.witnesses = {n};
      rep.detail = "p divides gcd(a_{k,n}, b_{k,n}) at n=" + std::to_string(n);
      return rep;
    }
  }
  rep.status = CheckStatus::WITNESSED;
  rep.detail = "p coprime to every term up to H";
  return rep;
}

CheckReport check_nu_unbounded(const SeriesFamily& fam, int k, const Int& p, long H) {
  CheckReport rep;
  rep.condition = "nu-unbounded";
  rep.horizon = H;
  std::vector<Int> m = prefix_max(fam.valuations(k, p, H));
  std::vector<Rat> g;
  for (long N = 1; N <= H; ++N) {
    g.emplace_back(m[N - 1]);
    rep.stats.emplace_back(N, m[N - 1].get_str());
  }
  rep.status = growth_status(g, H, fam.params().growth_threshold);
  rep.detail = rep.status == CheckStatus::WITNESSED ? "prefix max keeps growing"
                                                    : "growth heuristic not met";
  return rep;
}

CheckReport check_distinct_or_bounded(const SeriesFamily& fam, int k, const Int& p, long H,
                                      const Int& C) {
  CheckReport rep;
  rep.condition = "distinct-or-bounded";
  rep.horizon = H;
  std::vector<Int> v = fam.valuations(k, p, H);
  for (long m = 1; m <= H; ++m)
    for (long n = m + 1; n <= H; ++n)
      if (v[m - 1] == v[n - 1] && v[m - 1] > C) {
        rep.status = CheckStatus::FALSIFIED;
        rep.witnesses = {m, n};
        rep.detail = "nu_p collision with value " + v[m - 1].get_str() + " > C at (m,n)=(" +
                     std::to_string(m) + "," + std::to_string(n) + ")";
        return rep;
      }
  rep.status = CheckStatus::WITNESSED;
  rep.detail = "all collisions bounded by C=" + C.get_str();
  return rep;
}

CheckReport check_bounded_max_unique(const SeriesFamily& fam, int k, const Int& p, long H) {
  CheckReport rep;
  rep.condition = "bounded-max-unique";
  rep.horizon = H;
  std::vector<Int> v = fam.valuations(k, p, H);
  long half = (H + 1) / 2;
  Int max_h = v[0], max_half = v[0];
  for (long n = 1; n <= H; ++n) {
    if (v[n - 1] > max_h) max_h = v[n - 1];
    if (n <= half && v[n - 1] > max_half) max_half = v[n - 1];
  }
  long mult = 0;
  long arg = 0;
  for (long n = 1; n <= H; ++n)
    if (v[n - 1] == max_h) {
      ++mult;
      arg = n;
    }
  bool stabilized = max_h == max_half;
  if (stabilized && mult == 1) {
    rep.status = CheckStatus::WITNESSED;
    rep.witnesses = {arg};
    rep.detail = "max nu_p stabilized at " + max_h.get_str() + ", attained once";
  } else {
    rep.status = CheckStatus::UNKNOWN;
    rep.detail = stabilized ? "max attained " + std::to_string(mult) + " times up to H"
                            : "max not yet stabilized across half horizon";
  }
  return rep;
}

}  // namespace qindep
