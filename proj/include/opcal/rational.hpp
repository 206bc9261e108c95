#ifndef OPCAL_RATIONAL_HPP
#define OPCAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace opcal {

// Exact arithmetic over Q. cpp_rational keeps gcd(|num|, den) = 1 and
// den > 0 after every operation, which is the canonical form we rely on.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& base, unsigned e)
{
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Integer factorial(unsigned n)
{
    Integer r(1);
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

// Generalized binomial coefficient C(a, k) for rational a.
inline Rational binomial(const Rational& a, unsigned k)
{
    Rational r(1);
    for (unsigned j = 0; j < k; ++j) r *= (a - j) / Rational(j + 1);
    return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
inline Rational parse_rational(const std::string& text)
{
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    }
}

} // namespace opcal

#endif
