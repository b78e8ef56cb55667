#include "k3strat/schubert.hpp"

#include "k3strat/rational.hpp"

namespace k3strat {

std::string cover_kind_name(CoverKind k) {
    switch (k) {
        case CoverKind::InseparableDegreeP: return "InseparableDegreeP";
        case CoverKind::DimensionLoss: return "DimensionLoss";
    }
    throw DomainError("unknown cover kind");
}

std::vector<CoverDatum> pieri_covers(const WeylElement& w) {
    std::vector<CoverDatum> out;
    const int m = w.rank();
    const Family gen_family = w.family() == Family::B ? Family::B : Family::C;
    for (int i = 1; i <= m; ++i) {
        if (!is_right_descent(w, i)) continue;
        out.push_back({w, i, multiply(w, simple_reflection(gen_family, m, i))});
    }
    return out;
}

CoverKind classify_cover(const WeylElement& w, int i) {
    const int m = w.rank();
    if (i <= 1 || i > m)
        throw DomainError("classification needs a reflection index with 1 < i <= m");
    if (!is_right_descent(w, i))
        throw DomainError("classification needs s_i to be a right descent of w");

    const Family gen_family = w.family() == Family::B ? Family::B : Family::C;
    const WeylElement s = simple_reflection(gen_family, m, i);
    const int conjugate_length = length(multiply(s, multiply(w, s)));
    const int base_length = length(w);
    if (conjugate_length == base_length) return CoverKind::InseparableDegreeP;
    if (conjugate_length == base_length - 2) return CoverKind::DimensionLoss;
    throw DomainError("conjugate length outside the two admissible values");
}

RationalPolynomial poincare_polynomial(Family f, int m) {
    if (f == Family::C)
        throw DomainError("Poincare polynomials are computed for families B and D");
    RationalPolynomial sum;
    for (const WeylElement& w : all_elements(f, m))
        sum = sum + RationalPolynomial::monomial(Rational(1), length(w));
    return sum;
}

}  // namespace k3strat
