#include <qindep/dyadic.hpp>

#include <sstream>

namespace qindep {

Dyadic::Dyadic(Int mant, Int exp2) : mant_(std::move(mant)), exp2_(std::move(exp2)) {
  if (mant_ < 0) throw std::invalid_argument("Dyadic: negative mantissa");
  if (mant_ == 0) {
    exp2_ = 0;
    return;
  }
  // Strip trailing zeros for a canonical form.
  unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mant_ >>= tz;
    exp2_ += tz;
  }
}

Dyadic Dyadic::from_rat_up(const Rat& q, unsigned prec_bits) {
  if (q < 0) throw std::invalid_argument("Dyadic::from_rat_up: negative value");
  if (q == 0) return zero();
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  long shift = static_cast<long>(prec_bits) + 2 + static_cast<long>(bit_length(den)) -
               static_cast<long>(bit_length(num));
  if (shift < 0) shift = 0;
  Int m = ceil_div(num << static_cast<unsigned long>(shift), den);
  return Dyadic(std::move(m), Int(-shift)).rounded_up(prec_bits + 4);
}

Dyadic Dyadic::from_rat_down(const Rat& q, unsigned prec_bits) {
  if (q < 0) throw std::invalid_argument("Dyadic::from_rat_down: negative value");
  if (q == 0) return zero();
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  long shift = static_cast<long>(prec_bits) + 2 + static_cast<long>(bit_length(den)) -
               static_cast<long>(bit_length(num));
  if (shift < 0) shift = 0;
  Int m = floor_div(num << static_cast<unsigned long>(shift), den);
  return Dyadic(std::move(m), Int(-shift)).rounded_down(prec_bits + 4);
}

Dyadic Dyadic::rounded_up(unsigned prec_bits) const {
  std::size_t bl = bit_length(mant_);
  if (bl <= prec_bits) return *this;
  unsigned long sh = bl - prec_bits;
  Int m = ceil_div(mant_, Int(1) << sh);
  return Dyadic(std::move(m), exp2_ + sh);
}

Dyadic Dyadic::rounded_down(unsigned prec_bits) const {
  std::size_t bl = bit_length(mant_);
  if (bl <= prec_bits) return *this;
  unsigned long sh = bl - prec_bits;
  Int m = floor_div(mant_, Int(1) << sh);
  return Dyadic(std::move(m), exp2_ + sh);
}

Dyadic Dyadic::mul_up(const Dyadic& o, unsigned prec_bits) const {
  return Dyadic(mant_ * o.mant_, exp2_ + o.exp2_).rounded_up(prec_bits);
}

Dyadic Dyadic::mul_down(const Dyadic& o, unsigned prec_bits) const {
  return Dyadic(mant_ * o.mant_, exp2_ + o.exp2_).rounded_down(prec_bits);
}

namespace {

// Alignment shifts beyond this are replaced by a one-ulp nudge; actually
// shifting would materialize astronomically long mantissas.
bool align_too_far(const Int& delta, unsigned prec_bits) {
  return delta > Int(prec_bits) + 96;
}

}  // namespace

Dyadic Dyadic::add_up(const Dyadic& o, unsigned prec_bits) const {
  if (is_zero()) return o.rounded_up(prec_bits);
  if (o.is_zero()) return rounded_up(prec_bits);
  const Dyadic& hi = exp2_ >= o.exp2_ ? *this : o;
  const Dyadic& lo = exp2_ >= o.exp2_ ? o : *this;
  Int delta = hi.exp2_ - lo.exp2_ + Int(bit_length(hi.mant_)) - Int(bit_length(lo.mant_));
  if (align_too_far(delta, prec_bits)) {
    Dyadic r = hi.rounded_up(prec_bits);
    return Dyadic(r.mant_ + 1, r.exp2_);  // absorb lo into one ulp
  }
  Int shift = hi.exp2_ - lo.exp2_;
  Int m = (hi.mant_ << shift.get_ui()) + lo.mant_;
  return Dyadic(std::move(m), lo.exp2_).rounded_up(prec_bits);
}

Dyadic Dyadic::add_down(const Dyadic& o, unsigned prec_bits) const {
  if (is_zero()) return o.rounded_down(prec_bits);
  if (o.is_zero()) return rounded_down(prec_bits);
  const Dyadic& hi = exp2_ >= o.exp2_ ? *this : o;
  const Dyadic& lo = exp2_ >= o.exp2_ ? o : *this;
  Int delta = hi.exp2_ - lo.exp2_ + Int(bit_length(hi.mant_)) - Int(bit_length(lo.mant_));
  if (align_too_far(delta, prec_bits)) return hi.rounded_down(prec_bits);
  Int shift = hi.exp2_ - lo.exp2_;
  Int m = (hi.mant_ << shift.get_ui()) + lo.mant_;
  return Dyadic(std::move(m), lo.exp2_).rounded_down(prec_bits);
}

Cmp compare(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() && b.is_zero()) return Cmp::Equal;
  if (a.is_zero()) return Cmp::Less;
  if (b.is_zero()) return Cmp::Greater;
  // value in [2^(L-1), 2^L) with L = bitlen(mant) + exp2.
  Int la = Int(bit_length(a.mant_)) + a.exp2_;
  Int lb = Int(bit_length(b.mant_)) + b.exp2_;
  if (la < lb) return Cmp::Less;
  if (la > lb) return Cmp::Greater;
  // Same magnitude window: align exactly (shift bounded by mantissa sizes).
  Int shift = a.exp2_ - b.exp2_;
  Int am = a.mant_, bm = b.mant_;
  if (shift >= 0)
    am <<= shift.get_ui();
  else
    bm <<= Int(-shift).get_ui();
  int c = cmp(am, bm);
  return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
}

Cmp Dyadic::compare_rat(const Rat& q) const {
  if (q < 0) return is_zero() ? Cmp::Greater : Cmp::Greater;
  if (q == 0) return is_zero() ? Cmp::Equal : Cmp::Greater;
  if (is_zero()) return Cmp::Less;
  // Compare mant * 2^exp2 * den vs num via magnitude windows first.
  Int lhs_hi = Int(bit_length(mant_)) + exp2_ + Int(bit_length(q.get_den()));
  Int lhs_lo = lhs_hi - 2;
  Int rhs_hi(bit_length(q.get_num()));
  Int rhs_lo = rhs_hi - 1;
  if (lhs_hi <= rhs_lo) return Cmp::Less;
  if (lhs_lo >= rhs_hi) return Cmp::Greater;
  // Windows overlap, so exp2 is moderate; materialize the power.
  Int lhs = mant_ * q.get_den();
  Int rhs = q.get_num();
  if (exp2_ >= 0)
    lhs <<= exp2_.get_ui();
  else
    rhs <<= Int(-exp2_).get_ui();
  int c = cmp(lhs, rhs);
  return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
}

std::optional<RatInterval> Dyadic::log2(unsigned frac_bits) const {
  if (is_zero()) return std::nullopt;
  RatInterval lg = log2_int(mant_, frac_bits);
  return RatInterval{lg.lo + Rat(exp2_), lg.hi + Rat(exp2_)};
}

std::optional<Rat> Dyadic::to_rat(unsigned long bit_cap) const {
  if (is_zero()) return Rat(0);
  if (exp2_ >= 0) {
    if (Int(bit_length(mant_)) + exp2_ > Int(bit_cap)) return std::nullopt;
    return Rat(mant_ << exp2_.get_ui());
  }
  Int neg = -exp2_;
  if (neg > Int(bit_cap)) return std::nullopt;
  return make_rat(mant_, Int(1) << neg.get_ui());
}

std::string Dyadic::str() const {
  std::ostringstream os;
  os << mant_.get_str() << "*2^" << exp2_.get_str();
  return os.str();
}

namespace {

constexpr unsigned long kDivMaterializeCap = 1ul << 16;

}

Dyadic div_up(const Int& b_abs, const FactoredInteger& a, unsigned prec_bits) {
  if (b_abs < 0) throw std::invalid_argument("div_up: negative numerator");
  if (b_abs == 0) return Dyadic::zero();
  MaterializeResult m = materialize(a.abs(), kDivMaterializeCap);
  if (!m.too_large()) {
    unsigned long sh = prec_bits + 4 + bit_length(*m.value);
    Int num = b_abs << sh;
    return Dyadic(ceil_div(num, *m.value), Int(-static_cast<long>(sh))).rounded_up(prec_bits);
  }
  // Coarse route: 1/|a| <= 2^(-floor(log2 lo)).
  RatInterval lg = log2_factored(a, 24);
  return Dyadic(b_abs, -rat_floor(lg.lo)).rounded_up(prec_bits);
}

Dyadic div_down(const Int& b_abs, const FactoredInteger& a, unsigned prec_bits) {
  if (b_abs < 0) throw std::invalid_argument("div_down: negative numerator");
  if (b_abs == 0) return Dyadic::zero();
  MaterializeResult m = materialize(a.abs(), kDivMaterializeCap);
  if (!m.too_large()) {
    unsigned long sh = prec_bits + 4 + bit_length(*m.value);
    Int num = b_abs << sh;
    return Dyadic(floor_div(num, *m.value), Int(-static_cast<long>(sh))).rounded_down(prec_bits);
  }
  RatInterval lg = log2_factored(a, 24);
  return Dyadic(b_abs, -rat_ceil(lg.hi)).rounded_down(prec_bits);
}

}  // namespace qindep
