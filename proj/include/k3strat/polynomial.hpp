#pragma once

#include "k3strat/rational.hpp"

#include <string>
#include <vector>

namespace k3strat {

// Dense univariate polynomial with exact rational coefficients.
// coeffs()[i] is the coefficient of X^i; the representation never carries
// trailing zeros, so degree() == coeffs().size() - 1 except for the zero
// polynomial, which has an empty coefficient vector and degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(Rational constant);
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    // X^k with rational coefficient c.
    static RationalPolynomial monomial(Rational c, int k);
    // 1 + X + ... + X^{k-1}; k = 0 gives the zero polynomial.
    static RationalPolynomial q_integer(int k);
    // X^i - 1 and X^i + 1.
    static RationalPolynomial power_minus_one(int i);
    static RationalPolynomial power_plus_one(int i);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational operator()(const Rational& x) const;

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& s) const;
    bool operator==(const RationalPolynomial& o) const = default;

    // Exact quotient; throws DomainError if the division leaves a remainder.
    RationalPolynomial divide_exact(const RationalPolynomial& divisor) const;

    // Human form in the given variable name, highest degree first,
    // e.g. "P^3 - P^2 - P + 1" or "1/2*P^2 - 1/2".
    std::string to_string(const std::string& var = "P") const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace k3strat
