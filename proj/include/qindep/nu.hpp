#pragma once

#include <qindep/extnat.hpp>

namespace qindep {

// p-adic valuation of an integer: nu_p(0) = ∞; otherwise the unique e >= 0
// with p^e | n, p^(e+1) ∤ n. Primality of p is the caller's responsibility;
// p < 2 throws, and debug builds run a probabilistic prime check.
ExtNat nu_p_int(const Int& n, const Int& p);

// Extension to Q: nu_p(a/b) = nu_p(a) - nu_p(b), representative-independent.
ExtVal nu_p_rat(const Rat& q, const Int& p);

}  // namespace qindep
