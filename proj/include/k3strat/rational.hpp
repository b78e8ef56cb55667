#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace k3strat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an argument is outside an operation's domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive computation would exceed the configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_pow(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

// Rationals are carried as "numerator/denominator" strings, always reduced,
// denominator positive.
inline std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("malformed rational: " + s);
    }
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_odd_prime(long long n) { return n >= 3 && n % 2 == 1 && is_prime(n); }

}  // namespace k3strat
