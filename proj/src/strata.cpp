#include "k3strat/strata.hpp"

#include <algorithm>
#include <sstream>

namespace k3strat {

namespace {

// Factored form of a class coefficient: an optional leading 1/2 and products
// of (P^i - 1) / (P^i + 1) style factors, divided exactly.
struct FactoredCoefficient {
    bool half = false;
    std::vector<std::string> numerator;
    std::vector<std::string> denominator;
    RationalPolynomial num_poly{Rational(1)};
    RationalPolynomial den_poly{Rational(1)};

    void times_minus(int exponent) {
        numerator.push_back(factor(exponent, '-'));
        num_poly = num_poly * RationalPolynomial::power_minus_one(exponent);
    }
    void times_plus(int exponent) {
        numerator.push_back(factor(exponent, '+'));
        num_poly = num_poly * RationalPolynomial::power_plus_one(exponent);
    }
    void over_minus(int exponent) {
        denominator.push_back(factor(exponent, '-'));
        den_poly = den_poly * RationalPolynomial::power_minus_one(exponent);
    }
    void over_plus(int exponent) {
        denominator.push_back(factor(exponent, '+'));
        den_poly = den_poly * RationalPolynomial::power_plus_one(exponent);
    }

    RationalPolynomial value() const {
        RationalPolynomial q = num_poly.divide_exact(den_poly);
        return half ? q * Rational(1, 2) : q;
    }

    std::string rendered() const {
        std::ostringstream os;
        if (half) os << "1/2 · ";
        if (numerator.empty()) {
            os << "1";
        } else {
            for (const std::string& f : numerator) os << f;
        }
        if (!denominator.empty()) {
            os << " / ";
            for (const std::string& f : denominator) os << f;
        }
        return os.str();
    }

private:
    static std::string factor(int exponent, char sign) {
        std::ostringstream os;
        os << "(P";
        if (exponent != 1) os << "^" << exponent;
        os << sign << "1)";
        return os.str();
    }
};

int half_rank(int n) { return n / 2; }

void check_dimension(int n) {
    if (n % 2 == 1) {
        if (n < 5) throw DomainError("odd cohomology dimension must be at least 5");
    } else {
        if (n < 6) throw DomainError("even cohomology dimension must be at least 6");
    }
}

}  // namespace

std::string invariant_kind_name(InvariantKind k) {
    switch (k) {
        case InvariantKind::Height: return "Height";
        case InvariantKind::ArtinInvariant: return "ArtinInvariant";
    }
    throw DomainError("unknown invariant kind");
}

StratumDescriptor make_descriptor(int n, InvariantKind kind, int value, bool twisted) {
    check_dimension(n);
    const int m = half_rank(n);
    if (value < 1 || value > m)
        throw DomainError("invariant value must lie in 1.." + std::to_string(m));
    if (n % 2 == 1 && twisted)
        throw DomainError("odd dimensions have no twisted stratum");
    StratumDescriptor d;
    d.n = n;
    d.kind = kind;
    d.value = value;
    d.twisted = twisted;
    d.empty = n % 2 == 0 && value == m &&
              ((kind == InvariantKind::Height && !twisted) ||
               (kind == InvariantKind::ArtinInvariant && twisted));
    return d;
}

WeylElement final_for_invariant(const StratumDescriptor& d) {
    const StratumDescriptor v = make_descriptor(d.n, d.kind, d.value, d.twisted);
    const int m = half_rank(v.n);
    const int j = v.kind == InvariantKind::Height ? v.value : 2 * m + 1 - v.value;
    if (v.n % 2 == 1) return final_elements(Family::B, m)[j - 1];
    const WeylElement base = final_elements(Family::D, m)[j - 1];
    return v.twisted ? twist(base) : base;
}

StratumDescriptor invariant_for_final(int n, const WeylElement& w) {
    check_dimension(n);
    const int m = half_rank(n);
    if (w.rank() != m)
        throw DomainError("element rank must match the dimension");
    if ((n % 2 == 1) != (w.family() == Family::B))
        throw DomainError("family parity must match the dimension parity");

    const bool twisted = w.family() == Family::C;
    const WeylElement base = twisted ? twist(w) : w;
    const std::vector<WeylElement> finals =
        final_elements(n % 2 == 1 ? Family::B : Family::D, m);
    const auto it = std::find(finals.begin(), finals.end(), base);
    if (it == finals.end())
        throw DomainError("element is not final: " + window_string(w));
    const int j = static_cast<int>(it - finals.begin()) + 1;
    if (j <= m) return make_descriptor(n, InvariantKind::Height, j, twisted);
    return make_descriptor(n, InvariantKind::ArtinInvariant, 2 * m + 1 - j, twisted);
}

ClassExpr cycle_class(const StratumDescriptor& d) {
    const StratumDescriptor v = make_descriptor(d.n, d.kind, d.value, d.twisted);
    if (v.empty)
        throw DomainError("the stratum named by this descriptor is empty");
    const int m = half_rank(v.n);

    FactoredCoefficient fc;
    int lambda = 0;
    if (v.n % 2 == 1) {
        if (v.kind == InvariantKind::Height) {
            for (int i = 1; i < v.value; ++i) fc.times_minus(i);
            lambda = v.value - 1;
        } else if (v.value == m) {
            fc.half = true;
            for (int i = 1; i <= m; ++i) fc.times_minus(i);
            lambda = m;
        } else {
            const int k = m + 1 - v.value;  // position past the middle, 2..m
            fc.half = true;
            for (int i = k; i <= m; ++i) fc.times_minus(2 * i);
            for (int i = 1; i <= m - k + 1; ++i) fc.over_plus(i);
            lambda = m + k - 1;
        }
    } else if (!v.twisted) {
        if (v.kind == InvariantKind::Height) {
            for (int i = 1; i < v.value; ++i) fc.times_minus(i);
            lambda = v.value - 1;
        } else if (v.value == m) {
            for (int i = 1; i <= m - 1; ++i) fc.times_minus(i);
            lambda = m - 1;
        } else {
            const int k = m + 1 - v.value;
            fc.half = true;
            for (int i = 1; i <= m - 1; ++i) fc.times_minus(i);
            for (int i = m - k + 2; i <= m; ++i) fc.times_plus(i);
            for (int i = 1; i <= k - 2; ++i) fc.over_plus(i);
            for (int i = 1; i <= k - 1; ++i) fc.over_minus(i);
            lambda = m + k - 2;
        }
    } else {
        if (v.kind == InvariantKind::Height && v.value < m) {
            for (int i = 1; i < v.value; ++i) fc.times_minus(i);
            lambda = v.value - 1;
        } else if (v.kind == InvariantKind::Height) {
            for (int i = 1; i <= m; ++i) fc.times_minus(i);
            lambda = m - 1;
        } else {
            const int k = m + 1 - v.value;
            fc.half = true;
            for (int i = 1; i <= m; ++i) fc.times_minus(i);
            for (int i = m - k + 2; i <= m - 1; ++i) fc.times_plus(i);
            for (int i = 1; i <= k - 1; ++i) fc.over_plus(i);
            for (int i = 1; i <= k - 2; ++i) fc.over_minus(i);
            lambda = m + k - 2;
        }
    }

    ClassExpr out;
    out.coefficient = fc.value();
    out.lambda_power = lambda;
    out.factored = fc.rendered();
    out.stratum = v;
    if (v.n == 21 && lambda >= 18)
        out.note = "this power of the Hodge class vanishes on the open family; "
                   "the value pairs only through the compactification";
    return out;
}

std::pair<Rational, int> evaluate_class(const ClassExpr& c, long long p) {
    if (!is_odd_prime(p))
        throw DomainError("evaluation point must be an odd prime");
    return {c.coefficient(Rational(p)), c.lambda_power};
}

RationalPolynomial degree_ratio(int m, int i) {
    if (m < 2) throw DomainError("degree ratios need rank at least 2");
    if (i < 1 || i >= m)
        throw DomainError("degree ratio is defined for 1 <= i < m only");
    return RationalPolynomial::q_integer(2 * m - 2 * i);
}

std::vector<std::vector<StratumDescriptor>> stratum_poset(int n) {
    check_dimension(n);
    const int m = half_rank(n);
    std::vector<std::vector<StratumDescriptor>> chains;
    if (n % 2 == 1) {
        std::vector<StratumDescriptor> chain;
        for (int h = 1; h <= m; ++h)
            chain.push_back(make_descriptor(n, InvariantKind::Height, h));
        for (int s = m; s >= 1; --s)
            chain.push_back(make_descriptor(n, InvariantKind::ArtinInvariant, s));
        chains.push_back(std::move(chain));
    } else {
        std::vector<StratumDescriptor> plain;
        for (int h = 1; h <= m - 1; ++h)
            plain.push_back(make_descriptor(n, InvariantKind::Height, h, false));
        for (int s = m; s >= 1; --s)
            plain.push_back(make_descriptor(n, InvariantKind::ArtinInvariant, s, false));
        chains.push_back(std::move(plain));

        std::vector<StratumDescriptor> twisted;
        for (int h = 1; h <= m; ++h)
            twisted.push_back(make_descriptor(n, InvariantKind::Height, h, true));
        for (int s = m - 1; s >= 1; --s)
            twisted.push_back(make_descriptor(n, InvariantKind::ArtinInvariant, s, true));
        chains.push_back(std::move(twisted));
    }
    return chains;
}

}  // namespace k3strat
