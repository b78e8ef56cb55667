#include "k3strat/mass.hpp"

#include <vector>

namespace k3strat {

namespace {

constexpr int bernoulli_cap = 40;

// B_0..B_cap via sum_{j=0}^{k} C(k+1, j) B_j = 0; built once, then shared.
const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = [] {
        std::vector<Rational> b;
        b.reserve(bernoulli_cap + 1);
        b.push_back(Rational(1));
        std::vector<Int> binom{1, 1};  // row k+1 of Pascal's triangle
        for (int k = 1; k <= bernoulli_cap; ++k) {
            std::vector<Int> next(k + 2, 1);
            for (int j = 1; j <= k; ++j) next[j] = binom[j - 1] + binom[j];
            binom = std::move(next);
            Rational acc(0);
            for (int j = 0; j < k; ++j) acc += Rational(binom[j]) * b[j];
            b.push_back(-acc / Rational(binom[k]));
        }
        return b;
    }();
    return table;
}

}  // namespace

Rational bernoulli(int k) {
    if (k <= 0 || k % 2 != 0)
        throw DomainError("Bernoulli numbers are exposed for even positive k");
    if (k > bernoulli_cap)
        throw DomainError("Bernoulli numbers are tabulated up to k = " +
                          std::to_string(bernoulli_cap));
    return bernoulli_table()[k];
}

Rational zeta_negative_odd(int j) {
    if (j >= 0 || j % 2 == 0)
        throw DomainError("zeta is exposed at negative odd integers only");
    if (j < -(bernoulli_cap - 1))
        throw DomainError("zeta values reach down to j = -" +
                          std::to_string(bernoulli_cap - 1));
    const int k = (1 - j) / 2;  // j = 1 - 2k
    return -bernoulli(2 * k) / Rational(2 * k);
}

Rational deuring_mass(long long p) {
    if (!is_odd_prime(p))
        throw DomainError("the supersingular count needs an odd prime");
    return Rational(p - 1) / Rational(24);
}

Rational superspecial_mass(const MassParams& params) {
    if (!is_odd_prime(params.p))
        throw DomainError("the superspecial count needs an odd prime");
    if (params.dprime < 1)
        throw DomainError("the half-degree must be positive");
    if (params.dprime % params.p == 0)
        throw DomainError("the polarization degree must be prime to p");
    if (params.e8_copies != 0 && params.e8_copies != 2)
        throw DomainError("the lattice shape allows 0 or 2 copies of E8(-1)");

    const int M = params.e8_copies;
    const Int p(params.p);

    Rational mass = Rational(-1) / Rational(int_pow(Int(2), 4 * M + 1));
    mass *= Rational(int_pow(p, 8 * M + 4) - 1) / Rational(p + 1);
    mass *= Rational(int_pow(Int(params.dprime), 10));

    long long rest = params.dprime;
    for (long long q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        mass *= Rational(1) + Rational(1) / Rational(int_pow(Int(q), 4 * M + 2));
    }
    if (rest > 1)
        mass *= Rational(1) + Rational(1) / Rational(int_pow(Int(rest), 4 * M + 2));

    for (int k = 1; k <= 4 * M + 2; ++k) mass *= zeta_negative_odd(1 - 2 * k);
    return mass;
}

}  // namespace k3strat
