#pragma once

#include "k3strat/rational.hpp"

namespace k3strat {

// Exact Bernoulli number B_k for even k <= 40, from the defining recurrence.
Rational bernoulli(int k);

// zeta(j) for negative odd j >= -39, via zeta(1-2k) = -B_{2k} / (2k).
Rational zeta_negative_odd(int j);

// Weighted count of supersingular elliptic curves in characteristic p: (p-1)/24.
Rational deuring_mass(long long p);

// Parameters of the superspecial counting formula: the polarization degree
// d = 2*dprime with gcd(2*dprime, p) = 1, and the number of E8(-1) summands
// in the transcendental lattice shape (0 or 2).
struct MassParams {
    long long p = 0;
    long long dprime = 1;
    int e8_copies = 0;
};

// Weighted number of superspecial members of the family:
// (-1/2^{4M+1}) * (p^{8M+4}-1)/(p+1) * dprime^10 * prod_{l | dprime} (1 + l^{-4M-2})
//   * prod_{k=1}^{4M+2} zeta(1-2k),   with M = e8_copies.
// The prime product runs over the distinct primes dividing dprime; the result
// is strictly positive.
Rational superspecial_mass(const MassParams& params);

}  // namespace k3strat
