#pragma once

#include <qindep/factored.hpp>

#include <vector>

namespace qindep {

Int next_prime(const Int& x);  // smallest prime > x

// n-th (1-based) prime of the increasing sequence of primes >= start.
Int nth_prime_from(const Int& start, long n);

// Full factorization of |v| by trial division (intended for small v, e.g.
// n^5 at desk horizons). Throws if a cofactor survives the bound.
FactoredInteger factor_small(const Int& v, unsigned long trial_bound = 1000000);

std::vector<Int> small_primes(std::size_t count);

}  // namespace qindep
