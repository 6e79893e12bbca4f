#pragma once

#include <qindep/ints.hpp>

#include <vector>

namespace qindep {

// Dense univariate polynomial over Z, coefficients lowest-degree first,
// normalized so the top coefficient is nonzero (empty vector = zero).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Int> c) : c_(std::move(c)) { normalize(); }
  static UPoly constant(const Int& v) { return UPoly(std::vector<Int>{v}); }
  static UPoly x() { return UPoly({Int(0), Int(1)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const Int& lc() const { return c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }

  void set_coeff(std::size_t i, const Int& v) {
    if (i >= c_.size()) c_.resize(i + 1, Int(0));
    c_[i] = v;
    normalize();
  }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly negated() const;
  UPoly scaled(const Int& v) const;
  UPoly shifted(std::size_t k) const;  // multiply by x^k
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  Int eval(const Int& x) const;
  Rat eval_rat(const Rat& x) const;
  UPoly derivative() const;

  Int content() const;           // >= 0; 0 only for the zero polynomial
  UPoly primitive_part() const;  // content removed, lc > 0
  Int sum_abs() const;

  std::string str() const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// Exact division over Z; false if b does not divide a exactly.
bool try_divide_exact(const UPoly& a, const UPoly& b, UPoly* quotient);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
UPoly pseudo_rem(const UPoly& a, const UPoly& b);

// gcd over Z (primitive PRS), lc > 0, contents included.
UPoly gcd_upoly(const UPoly& a, const UPoly& b);

// Yun squarefree decomposition of a primitive polynomial: f = prod f_i^i.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

// Full factorization over Z: f = content * prod factors_i^mult_i with each
// factor irreducible, primitive, lc > 0. content carries the sign.
struct UFactorization {
  Int content;
  std::vector<std::pair<UPoly, int>> factors;
};
UFactorization factor_upoly(const UPoly& f);

namespace modp {

// Arithmetic on dense polynomials over F_p (odd prime p, coefficients in
// [0, p)). Used by the factorization kernel.
using Poly = std::vector<Int>;

Poly reduce(const UPoly& f, const Int& p);
void normalize(Poly& f);
long degree(const Poly& f);
Poly mul(const Poly& a, const Poly& b, const Int& p);
Poly sub(const Poly& a, const Poly& b, const Int& p);
Poly add(const Poly& a, const Poly& b, const Int& p);
// Division by b with invertible leading coefficient.
void divmod(const Poly& a, const Poly& b, const Int& p, Poly* q, Poly* r);
Poly monic(const Poly& f, const Int& p);
Poly gcd(Poly a, Poly b, const Int& p);
// g, s, t with s*a + t*b = g (monic gcd).
void xgcd(Poly a, Poly b, const Int& p, Poly* g, Poly* s, Poly* t);
Poly powmod(const Poly& base, const Int& e, const Poly& mod, const Int& p);

}  // namespace modp

}  // namespace qindep
