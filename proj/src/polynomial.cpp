#include "k3strat/polynomial.hpp"

#include <sstream>

namespace k3strat {
namespace {

// Display form: integers without the "/1" that the interchange format uses.
std::string coeff_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace

RationalPolynomial::RationalPolynomial(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

RationalPolynomial RationalPolynomial::monomial(Rational c, int k) {
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::q_integer(int k) {
    std::vector<Rational> v(static_cast<size_t>(k), Rational(1));
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::power_minus_one(int i) {
    std::vector<Rational> v(static_cast<size_t>(i) + 1, Rational(0));
    v.front() = -1;
    v.back() = 1;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::power_plus_one(int i) {
    std::vector<Rational> v(static_cast<size_t>(i) + 1, Rational(0));
    v.front() = 1;
    v.back() = 1;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= s;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::divide_exact(const RationalPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    if (is_zero()) return {};
    if (degree() < divisor.degree())
        throw DomainError("inexact polynomial division: degree of dividend too small");
    std::vector<Rational> rem(c_);
    std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1, Rational(0));
    const auto& d = divisor.c_;
    for (size_t k = quot.size(); k-- > 0;) {
        Rational f = rem[k + d.size() - 1] / d.back();
        quot[k] = f;
        if (f != 0)
            for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw DomainError("inexact polynomial division: nonzero remainder");
    return RationalPolynomial(std::move(quot));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        if (i == 0) {
            out << coeff_str(a);
        } else {
            if (!unit) out << coeff_str(a) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace k3strat
