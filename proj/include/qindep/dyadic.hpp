#pragma once

#include <qindep/factored.hpp>

#include <optional>

namespace qindep {

// Non-negative dyadic number mant * 2^exp2 with arbitrary-precision exponent.
// The working scale of the tail/Z_N bounds is doubly exponential (values like
// 2^(-12!)), far beyond what a num/den rational can hold; a dyadic pair holds
// them exactly. Arithmetic comes in directed flavors: *_up never
// underestimates, *_down never overestimates, so a quantity bounded with the
// matching direction stays a certified bound.
class Dyadic {
 public:
  Dyadic() : mant_(0), exp2_(0) {}
  Dyadic(Int mant, Int exp2);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic pow2(const Int& e) { return Dyadic(1, e); }

  // Directed conversions from a non-negative rational.
  static Dyadic from_rat_up(const Rat& q, unsigned prec_bits);
  static Dyadic from_rat_down(const Rat& q, unsigned prec_bits);

  bool is_zero() const { return mant_ == 0; }
  const Int& mant() const { return mant_; }
  const Int& exp2() const { return exp2_; }

  // mant is kept below 2^prec_bits by directed rounding.
  Dyadic rounded_up(unsigned prec_bits) const;
  Dyadic rounded_down(unsigned prec_bits) const;

  Dyadic mul_up(const Dyadic& o, unsigned prec_bits) const;
  Dyadic mul_down(const Dyadic& o, unsigned prec_bits) const;
  Dyadic add_up(const Dyadic& o, unsigned prec_bits) const;
  Dyadic add_down(const Dyadic& o, unsigned prec_bits) const;

  // Exact comparisons; mantissas are small, so these always decide.
  friend Cmp compare(const Dyadic& a, const Dyadic& b);
  Cmp compare_rat(const Rat& q) const;  // q >= 0

  // Certified bracket of log2(value); nullopt for zero.
  std::optional<RatInterval> log2(unsigned frac_bits) const;

  // num/den rational when the total bit size stays within bit_cap.
  std::optional<Rat> to_rat(unsigned long bit_cap) const;

  std::string str() const;  // "mant*2^exp2"

 private:
  Int mant_;  // >= 0, trailing zeros stripped
  Int exp2_;
};

// Directed bounds on b_abs / |a| (b_abs >= 0, a nonzero).
Dyadic div_up(const Int& b_abs, const FactoredInteger& a, unsigned prec_bits);
Dyadic div_down(const Int& b_abs, const FactoredInteger& a, unsigned prec_bits);

}  // namespace qindep
