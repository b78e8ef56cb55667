#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3strat/polynomial.hpp"
#include "k3strat/rational.hpp"
#include "k3strat/weyl.hpp"

namespace k3strat {

// Invariant naming a stratum: the height of the formal group, or the Artin
// invariant on the supersingular side.
enum class InvariantKind { Height, ArtinInvariant };

std::string invariant_kind_name(InvariantKind k);

// One stratum of the moduli family with primitive cohomology dimension n.
// For even n the twisted flag picks the coset of the index-two subgroup the
// associated final element lives in; two of the even-n slots name strata that
// are empty, and stay representable so the emptiness itself can be reported.
struct StratumDescriptor {
    int n = 0;
    InvariantKind kind = InvariantKind::Height;
    int value = 0;       // h or sigma_0, in 1..floor(n/2)
    bool twisted = false;
    bool empty = false;

    bool operator==(const StratumDescriptor&) const = default;
};

// Validates ranges (odd n >= 5, even n >= 6; value in 1..floor(n/2); twisted
// only for even n) and computes the emptiness flag.
StratumDescriptor make_descriptor(int n, InvariantKind kind, int value, bool twisted = false);

// The final Weyl element whose stratum the descriptor names. Odd n indexes
// into family B, even n into family D or its twisted coset.
WeylElement final_for_invariant(const StratumDescriptor& d);

// Inverse of final_for_invariant; errors when w is not (possibly twisted) final.
StratumDescriptor invariant_for_final(int n, const WeylElement& w);

// Closed-stratum class: coefficient polynomial in the prime P times a power
// of the Hodge class lambda.
struct ClassExpr {
    RationalPolynomial coefficient;
    int lambda_power = 0;
    std::string factored;  // human-readable product/quotient form
    std::string note;      // set when the lambda power only pairs with the compactification
    StratumDescriptor stratum;
};

// Exact class of the (nonempty) closed stratum. Twice the coefficient has
// integer coefficients; all divisions in the quotient shapes are exact.
ClassExpr cycle_class(const StratumDescriptor& d);

// Coefficient evaluated at an odd prime, paired with the lambda power.
std::pair<Rational, int> evaluate_class(const ClassExpr& c, long long p);

// Ratio of neighbouring covering degrees in the height chain: the q-integer
// 1 + P + ... + P^{2m-2i-1}. Defined for 1 <= i < m.
RationalPolynomial degree_ratio(int m, int i);

// Realized strata in closure order, top (generic) first, one chain for odd n
// and two chains (untwisted, then twisted) for even n; empty slots removed.
std::vector<std::vector<StratumDescriptor>> stratum_poset(int n);

}  // namespace k3strat
