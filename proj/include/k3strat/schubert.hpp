#pragma once

#include <string>
#include <vector>

#include "k3strat/polynomial.hpp"
#include "k3strat/weyl.hpp"

namespace k3strat {

// One colength-1 step w -> w*s_i along a simple reflection.
struct CoverDatum {
    WeylElement source;
    int reflection_index;
    WeylElement target;  // source * s_i, one shorter
};

// How the length of the conjugate s_i*w*s_i compares to the length of w when
// s_i is a right descent: staying equal marks the degree-p inseparable case,
// dropping by two marks the dimension-losing case. No other value occurs.
enum class CoverKind { InseparableDegreeP, DimensionLoss };

std::string cover_kind_name(CoverKind k);

// All pairs (i, w*s_i) with length(w*s_i) = length(w) - 1, increasing i.
std::vector<CoverDatum> pieri_covers(const WeylElement& w);

// Requires 1 < i <= m and that s_i is a right descent of w.
CoverKind classify_cover(const WeylElement& w, int i);

// Sum of q^length(w) over the whole group, by exhaustive enumeration
// (rank capped at 4). Families B and D.
RationalPolynomial poincare_polynomial(Family f, int m);

}  // namespace k3strat
