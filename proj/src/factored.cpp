#include <qindep/factored.hpp>
#include <qindep/nu.hpp>

#include <cassert>
#include <sstream>

namespace qindep {

FactoredInteger::FactoredInteger(int sign, std::map<Int, Int> factors, Int residual)
    : sign_(sign), factors_(std::move(factors)), residual_(std::move(residual)) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("FactoredInteger: sign must be ±1");
  if (residual_ < 1) throw std::invalid_argument("FactoredInteger: residual must be >= 1");
  for (auto it = factors_.begin(); it != factors_.end();) {
    const Int& p = it->first;
    if (p < 2) throw std::invalid_argument("FactoredInteger: factor key < 2");
    assert(is_probable_prime(p) && "FactoredInteger: factor keys must be prime");
    if (it->second < 0) throw std::invalid_argument("FactoredInteger: negative exponent");
    // Restore coprimality: pull this prime out of the residual.
    if (residual_ > 1) {
      Int reduced;
      mp_bitcnt_t e = mpz_remove(reduced.get_mpz_t(), residual_.get_mpz_t(), p.get_mpz_t());
      if (e > 0) {
        residual_ = reduced;
        it->second += static_cast<unsigned long>(e);
      }
    }
    if (it->second == 0)
      it = factors_.erase(it);
    else
      ++it;
  }
}

FactoredInteger FactoredInteger::from_int(const Int& v, const std::vector<Int>& primes_hint) {
  if (v == 0) throw std::invalid_argument("FactoredInteger::from_int: zero is not representable");
  std::map<Int, Int> factors;
  for (const Int& p : primes_hint) factors.emplace(p, 0);
  return FactoredInteger(v < 0 ? -1 : 1, std::move(factors), ::abs(v));
}

FactoredInteger FactoredInteger::abs() const { return FactoredInteger(1, factors_, residual_); }

FactoredInteger FactoredInteger::negated() const {
  return FactoredInteger(-sign_, factors_, residual_);
}

FactoredInteger FactoredInteger::pow(const Int& e) const {
  if (e < 0) throw std::invalid_argument("FactoredInteger::pow: negative exponent");
  if (e == 0) return FactoredInteger();
  std::map<Int, Int> factors;
  for (const auto& [p, ex] : factors_) factors.emplace(p, ex * e);
  Int res = 1;
  if (residual_ > 1) {
    // Guard: an unfactored residual can only be powered by materializing it.
    Int bits = Int(bit_length(residual_)) * e;
    if (!fits_ulong(e) || bits > (Int(1) << 26))
      throw std::overflow_error("FactoredInteger::pow: residual power too large; factor it first");
    res = pow_ui(residual_, e.get_ui());
  }
  int s = (sign_ < 0 && mpz_odd_p(e.get_mpz_t())) ? -1 : 1;
  return FactoredInteger(s, std::move(factors), std::move(res));
}

std::string FactoredInteger::str() const {
  std::ostringstream os;
  if (sign_ < 0) os << "-";
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) os << "*";
    os << p.get_str();
    if (e != 1) os << "^" << e.get_str();
    first = false;
  }
  if (residual_ != 1 || first) {
    if (!first) os << "*";
    os << residual_.get_str();
  }
  return os.str();
}

ExtNat nu_p_factored(const FactoredInteger& x, const Int& p) {
  auto it = x.factors().find(p);
  if (it != x.factors().end()) return ExtNat(it->second);
  return nu_p_int(x.residual(), p);
}

FactoredInteger mul_factored(const FactoredInteger& a, const FactoredInteger& b) {
  std::map<Int, Int> factors = a.factors();
  for (const auto& [p, e] : b.factors()) factors[p] += e;
  return FactoredInteger(a.sign() * b.sign(), std::move(factors), a.residual() * b.residual());
}

RatInterval log2_factored(const FactoredInteger& x, unsigned frac_bits) {
  // Per-prime precision scales with the exponent's size so the summed
  // enclosure still meets frac_bits.
  thread_local std::map<Int, std::pair<unsigned, RatInterval>> cache;
  RatInterval total = RatInterval::point(Rat(0));
  unsigned nterms = static_cast<unsigned>(x.factors().size()) + 1;
  unsigned headroom = 4;
  while ((1u << headroom) < nterms) ++headroom;
  for (const auto& [p, e] : x.factors()) {
    unsigned need = frac_bits + static_cast<unsigned>(bit_length(e)) + headroom + 2;
    auto it = cache.find(p);
    if (it == cache.end() || it->second.first < need) {
      RatInterval li = log2_int(p, need);
      cache[p] = {need, li};
    }
    total = total + cache[p].second.scaled(Rat(e));
  }
  if (x.residual() > 1) total = total + log2_int(x.residual(), frac_bits + headroom + 2);
  return total;
}

MaterializeResult materialize(const FactoredInteger& x, unsigned long bit_cap) {
  RatInterval lg = log2_factored(x, 16);
  Int bit_lo = rat_floor(lg.lo) + 1;
  Int bit_hi = rat_floor(lg.hi) + 1;
  if (bit_lo > Int(bit_cap)) return {std::nullopt, bit_lo, bit_hi};
  Int v = x.residual();
  for (const auto& [p, e] : x.factors()) {
    // bit_lo within cap bounds every exponent; fits_ulong is guaranteed for
    // sane caps but checked anyway.
    if (!fits_ulong(e)) return {std::nullopt, bit_lo, bit_hi};
    v *= pow_ui(p, e.get_ui());
  }
  Int bl(bit_length(v));
  if (bl > Int(bit_cap)) return {std::nullopt, bl, bl};
  if (x.sign() < 0) v = -v;
  return {std::move(v), bl, bl};
}

bool equal_factored(const FactoredInteger& a, const FactoredInteger& b) {
  if (a.sign() != b.sign()) return false;
  // Renormalize both against the union key set, then compare structurally.
  std::map<Int, Int> keys;
  for (const auto& [p, e] : a.factors()) keys.emplace(p, 0);
  for (const auto& [p, e] : b.factors()) keys.emplace(p, 0);
  auto with_keys = [&keys](const FactoredInteger& x) {
    std::map<Int, Int> m = keys;
    for (const auto& [p, e] : x.factors()) m[p] += e;
    return FactoredInteger(1, std::move(m), x.residual());
  };
  FactoredInteger na = with_keys(a), nb = with_keys(b);
  return na.factors() == nb.factors() && na.residual() == nb.residual();
}

namespace {

Cmp compare_magnitudes(const FactoredInteger& a, const FactoredInteger& b) {
  for (unsigned prec : {48u, 192u, 768u}) {
    RatInterval la = log2_factored(a, prec);
    RatInterval lb = log2_factored(b, prec);
    if (la.hi < lb.lo) return Cmp::Less;
    if (la.lo > lb.hi) return Cmp::Greater;
    if (prec == 48u) {
      // Cancel shared primes and try to compare the leftovers exactly.
      std::map<Int, Int> left, right;
      for (const auto& [p, e] : a.factors()) left[p] = e;
      for (const auto& [p, e] : b.factors()) {
        auto it = left.find(p);
        Int d = (it == left.end() ? Int(0) : it->second) - e;
        if (d > 0)
          left[p] = d;
        else {
          left.erase(p);
          if (d < 0) right[p] = -d;
        }
      }
      FactoredInteger L(1, std::move(left), a.residual());
      FactoredInteger R(1, std::move(right), b.residual());
      constexpr unsigned long kCmpCap = 1ul << 22;
      MaterializeResult ml = materialize(L, kCmpCap);
      MaterializeResult mr = materialize(R, kCmpCap);
      if (!ml.too_large() && !mr.too_large()) {
        int c = cmp(*ml.value, *mr.value);
        return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
      }
    }
  }
  return Cmp::Undecided;
}

}  // namespace

Cmp compare_factored(const FactoredInteger& a, const FactoredInteger& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign() ? Cmp::Less : Cmp::Greater;
  if (equal_factored(a, b)) return Cmp::Equal;
  Cmp mag = compare_magnitudes(a.abs(), b.abs());
  if (mag == Cmp::Undecided) return mag;
  if (a.sign() > 0) return mag;
  return mag == Cmp::Less ? Cmp::Greater : Cmp::Less;
}

Cmp compare_with_pow2(const FactoredInteger& a, const Int& e) {
  if (e < 0) {
    // |a| >= 1 > 2^e for negative e.
    return a.sign() < 0 ? Cmp::Less : Cmp::Greater;
  }
  return compare_factored(a, FactoredInteger(1, {{Int(2), e}}, 1));
}

}  // namespace qindep
