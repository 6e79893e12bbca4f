#pragma once

#include <qindep/ints.hpp>

#include <map>
#include <vector>

namespace qindep {

using Exponents = std::vector<unsigned>;

inline unsigned long total_degree(const Exponents& e) {
  unsigned long d = 0;
  for (unsigned x : e) d += x;
  return d;
}

// Colexicographic order: last coordinate first, recursing on the prefix.
struct ColexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

// Sparse multivariate polynomial over Z. No zero coefficients are stored;
// every exponent tuple has length nvars.
class IntPolynomial {
 public:
  using TermMap = std::map<Exponents, Int, ColexLess>;

  explicit IntPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("IntPolynomial: nvars must be >= 1");
  }

  static IntPolynomial constant(int nvars, const Int& c) {
    IntPolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static IntPolynomial monomial(Exponents e, const Int& c) {
    IntPolynomial p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }
  static IntPolynomial variable(int nvars, int var) {
    Exponents e(nvars, 0);
    e.at(var) = 1;
    return monomial(std::move(e), 1);
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // -1 for the zero polynomial, else max total degree of a stored term.
  long degree() const;

  void add_term(Exponents e, const Int& c);
  Int coeff(const Exponents& e) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial negated() const;
  IntPolynomial scaled(const Int& c) const;
  bool operator==(const IntPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Rat evaluate(const std::vector<Rat>& point) const;
  Int evaluate_int(const std::vector<Int>& point) const;

  IntPolynomial derivative(int var) const;

  // Replace variable var by an arbitrary polynomial in the same variables.
  IntPolynomial substitute(int var, const IntPolynomial& value) const;

  // gcd of |coefficients| (0 for the zero polynomial).
  Int content() const;

  Int sum_abs_coeffs() const;

  std::string str() const;

 private:
  int nvars_;
  TermMap terms_;
};

// Maximal term under colex order. Throws on the zero polynomial.
std::pair<Exponents, Int> colex_leading(const IntPolynomial& p);

// Explicit Lipschitz constant d*K*R^(d-1)*sum|c| with d = max(deg, 1), valid
// on the box |x_k| <= R. Requires R >= 1.
Rat lipschitz_constant(const IntPolynomial& p, const Rat& R);

// Homogeneous polynomial; every stored term has total degree exactly D.
class HomogPolynomial {
 public:
  explicit HomogPolynomial(IntPolynomial p);
  const IntPolynomial& poly() const { return poly_; }
  long degree() const { return degree_; }
  int nvars() const { return poly_.nvars(); }

 private:
  IntPolynomial poly_;
  long degree_;
};

// Pad each term with x3-powers up to deg P. Requires nvars == 2, P != 0.
HomogPolynomial homogenize(const IntPolynomial& p);

// Set the last variable to 1 and drop it.
IntPolynomial dehomogenize(const HomogPolynomial& q);

}  // namespace qindep
