#pragma once

#include <qindep/ints.hpp>

namespace qindep {

// Element of Z ∪ {∞}. Infinity is greater than every finite value and absorbs
// addition. Valuations of nonzero integers are finite and non-negative;
// valuations of rationals may be negative; the valuation of 0 is infinity.
class ExtVal {
 public:
  ExtVal() = default;
  ExtVal(Int v) : v_(std::move(v)) {}
  ExtVal(long v) : v_(v) {}

  static ExtVal infinity() {
    ExtVal e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }

  const Int& finite() const {
    if (inf_) throw std::domain_error("ExtVal: infinite value has no finite part");
    return v_;
  }

  ExtVal operator+(const ExtVal& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtVal(v_ + o.v_);
  }

  ExtVal operator-() const {
    if (inf_) throw std::domain_error("ExtVal: cannot negate infinity");
    return ExtVal(-v_);
  }

  // Multiply by a non-negative integer; infinity saturates.
  ExtVal scaled(const Int& m) const {
    if (m < 0) throw std::invalid_argument("ExtVal::scaled: negative multiplier");
    if (inf_) return infinity();
    return ExtVal(v_ * m);
  }

  friend bool operator==(const ExtVal& a, const ExtVal& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }
  friend bool operator<(const ExtVal& a, const ExtVal& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
  friend bool operator<=(const ExtVal& a, const ExtVal& b) { return !(b < a); }
  friend bool operator>=(const ExtVal& a, const ExtVal& b) { return !(a < b); }

  std::string str() const;

 private:
  bool inf_ = false;
  Int v_ = 0;
};

// The spec's ExtNat: non-negative integers plus infinity. Same carrier type;
// the non-negative range is guaranteed by the producing operations.
using ExtNat = ExtVal;

inline ExtVal ext_max(const ExtVal& a, const ExtVal& b) { return a < b ? b : a; }

}  // namespace qindep
