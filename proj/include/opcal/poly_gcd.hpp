#ifndef OPCAL_POLY_GCD_HPP
#define OPCAL_POLY_GCD_HPP

#include "opcal/polynomial.hpp"

namespace opcal {

// Exact quotient a / b; throws std::domain_error if b does not divide a.
Polynomial poly_divexact(const Polynomial& a, const Polynomial& b);

// gcd over Q[x1..xn] by the primitive euclidean algorithm, returned with
// coprime integer coefficients and positive leading coefficient (grlex).
// gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Scales to coprime integer coefficients with positive grlex-leading
// coefficient; returns the canonical associate.
Polynomial poly_primitive(const Polynomial& a);

} // namespace opcal

#endif
