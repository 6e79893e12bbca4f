#pragma once

#include <qindep/extnat.hpp>
#include <qindep/log2exact.hpp>

#include <map>
#include <optional>
#include <vector>

namespace qindep {

// Outcome of materialize(): either the exact value, or too-large with the
// bit-length evidence (lower bound; exact when the bracket is degenerate).
struct MaterializeResult {
  std::optional<Int> value;
  Int bit_length_lo;  // certified lower bound on the bit length
  Int bit_length_hi;  // certified upper bound

  bool too_large() const { return !value.has_value(); }
};

enum class Cmp { Less, Equal, Greater, Undecided };

// Nonzero integer kept as sign * residual * prod p^e without materialization.
// Invariants: every stored exponent >= 1; residual >= 1 and coprime to every
// stored prime; value == sign * residual * prod p^e.
class FactoredInteger {
 public:
  // Normalizes: drops zero exponents, pulls factor-key primes out of the
  // residual by trial division. Throws on sign ∉ {−1,+1}, residual < 1,
  // negative exponent, or a key < 2.
  FactoredInteger(int sign, std::map<Int, Int> factors, Int residual);

  FactoredInteger() : FactoredInteger(1, {}, 1) {}

  // Factor v against the hinted primes; whatever remains is the residual.
  static FactoredInteger from_int(const Int& v, const std::vector<Int>& primes_hint = {});

  int sign() const { return sign_; }
  const std::map<Int, Int>& factors() const { return factors_; }
  const Int& residual() const { return residual_; }
  bool is_one() const { return sign_ == 1 && factors_.empty() && residual_ == 1; }

  FactoredInteger abs() const;
  FactoredInteger negated() const;

  // |this| raised to e >= 0. Exponents scale; a residual > 1 is materialized
  // via pow, guarded against absurd sizes.
  FactoredInteger pow(const Int& e) const;

  std::string str() const;

 private:
  int sign_;
  std::map<Int, Int> factors_;
  Int residual_;
};

// Exponent of p read from the factor map when present, else from the
// residual. Agrees with nu_p_int(materialize(x), p) whenever x materializes.
ExtNat nu_p_factored(const FactoredInteger& x, const Int& p);

FactoredInteger mul_factored(const FactoredInteger& a, const FactoredInteger& b);

// Exact value if its bit length is within bit_cap, else too-large.
MaterializeResult materialize(const FactoredInteger& x, unsigned long bit_cap);

// Rigorous enclosure of log2|x|.
RatInterval log2_factored(const FactoredInteger& x, unsigned frac_bits);

// Exact structural equality (normalizes against the union key set).
bool equal_factored(const FactoredInteger& a, const FactoredInteger& b);

// Compare by value. Decides via sign, log2 enclosures at increasing
// precision, then cancellation + bounded materialization; Undecided only
// when both sides stay astronomically large and provably near-equal.
Cmp compare_factored(const FactoredInteger& a, const FactoredInteger& b);

// a vs 2^e shortcut.
Cmp compare_with_pow2(const FactoredInteger& a, const Int& e);

}  // namespace qindep
