#pragma once

#include <qindep/poly.hpp>
#include <qindep/upoly.hpp>

#include <optional>

namespace qindep {

// Exact multivariate division under colex leading-term elimination.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// content * prod factors_i^mult_i with each factor primitive, irreducible
// over Q, and positive colex-leading coefficient. content carries the sign.
struct BiFactorization {
  Int content;
  std::vector<std::pair<IntPolynomial, int>> factors;
};
BiFactorization factor_bivariate(const IntPolynomial& p);

bool is_squarefree_bivariate(const IntPolynomial& p);

// View of a bivariate polynomial using only `var`; throws if the other
// variable occurs.
UPoly to_upoly(const IntPolynomial& p, int var);
IntPolynomial from_upoly(const UPoly& f, int nvars, int var);

// Resultant eliminating elim_var, returned as a univariate polynomial in the
// kept variable (Sylvester determinant, fraction-free Bareiss elimination).
UPoly resultant_bivariate(const IntPolynomial& f, const IntPolynomial& g, int elim_var);

}  // namespace qindep
