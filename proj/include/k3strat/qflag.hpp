#pragma once

#include <map>
#include <vector>

#include "k3strat/gfp.hpp"
#include "k3strat/weyl.hpp"

namespace k3strat {

// Default hard cap for exhaustive operations: p^n (flag enumeration) and p^4
// (Hermitian scan) must stay at or below this.
inline constexpr long long default_enumeration_budget = 6561;  // 3^8

// Split quadratic space over F_p with the anti-diagonal pairing
// <e_i, e_j> = 1 exactly when i + j = n + 1.
struct QuadraticSpace {
    int n;
    int p;

    // Bilinear pairing of two coordinate rows.
    int pair(const Row& u, const Row& v) const;
    bool operator==(const QuadraticSpace&) const = default;
};

// p odd prime, n >= 3.
QuadraticSpace make_split_space(int n, int p);

// True iff the form vanishes identically on the row span; rows must be
// independent.
bool is_isotropic(const QuadraticSpace& V, const Matrix& subspace);

// Nested chain of subspaces, dim of step j equal to j, each stored as a
// row-reduced basis so equality is representation independent. Partial flags
// are isotropic throughout; complete flags (n-1 steps) are isotropic up to
// step floor(n/2) and self-dual above it.
class IsotropicFlag {
public:
    IsotropicFlag() = default;

    // Step j = span of the first j rows; the full row set must be isotropic.
    static IsotropicFlag from_chain(const QuadraticSpace& V, const Matrix& rows);
    static IsotropicFlag from_steps(const QuadraticSpace& V, std::vector<Matrix> steps);

    int step_count() const { return static_cast<int>(steps_.size()); }
    const Matrix& step(int j) const;  // 1-based
    bool is_complete(const QuadraticSpace& V) const;

    bool operator==(const IsotropicFlag&) const = default;
    bool operator<(const IsotropicFlag& o) const { return steps_ < o.steps_; }

private:
    std::vector<Matrix> steps_;

    // completion builds steps that are valid by construction
    friend IsotropicFlag complete_flag(const QuadraticSpace& V, const IsotropicFlag& flag);
};

// Extends a maximal isotropic flag (floor(n/2) steps) to the full self-dual
// flag by taking orthogonal complements; already-complete flags pass through.
IsotropicFlag complete_flag(const QuadraticSpace& V, const IsotropicFlag& flag);

// Even n only: replaces the middle step by the unique other maximal isotropic
// subspace over the penultimate step. Involution; all other steps unchanged.
IsotropicFlag twist_flag(const QuadraticSpace& V, const IsotropicFlag& flag);

// The coordinate flag built on e_1, ..., e_{floor(n/2)}, completed.
IsotropicFlag standard_flag(const QuadraticSpace& V);

// The Weyl element w with w(j) = position of the jump of B's step j across
// A's chain, computed in A-adapted coordinates. Odd n lands in family B,
// even n in the ambient even family with the coset telling the two flags'
// orbits apart.
WeylElement relative_position(const QuadraticSpace& V, const IsotropicFlag& a,
                              const IsotropicFlag& b);

// Every complete self-dual flag exactly once (materialized).
std::vector<IsotropicFlag> enumerate_isotropic_flags(
    const QuadraticSpace& V, long long budget = default_enumeration_budget);

// Flag count without materializing; the default entry point fans out with
// OpenMP over the first flag step, the serial twin is the reference kernel.
long long count_isotropic_flags(const QuadraticSpace& V,
                                long long budget = default_enumeration_budget);
long long count_isotropic_flags_serial(const QuadraticSpace& V,
                                       long long budget = default_enumeration_budget);

using CensusMap = std::map<WeylElement, long long>;

// Number of flags at each relative position from the reference flag a.
// Parallel default plus serial reference, as for the count.
CensusMap bruhat_cell_census(const QuadraticSpace& V, const IsotropicFlag& a,
                             long long budget = default_enumeration_budget);
CensusMap bruhat_cell_census_serial(const QuadraticSpace& V, const IsotropicFlag& a,
                                    long long budget = default_enumeration_budget);

// Projective points of x^{p+1} + y^{p+1} + z^{p+1} = 0 over F_{p^2},
// by exhaustive scan; requires p^4 within budget.
long long hermitian_point_count(int p, long long budget = default_enumeration_budget);

}  // namespace k3strat
