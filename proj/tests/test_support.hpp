#ifndef OPCAL_TEST_SUPPORT_HPP
#define OPCAL_TEST_SUPPORT_HPP

#include <vector>

#include "opcal/polynomial.hpp"

namespace opcal::test {

// Independent identity oracle: two polynomials of per-variable degree < points
// agree iff they agree on the full integer grid {0..points-1}^arity.
inline bool agree_on_grid(const Polynomial& a, const Polynomial& b, unsigned points)
{
    if (a.arity() != b.arity()) return false;
    unsigned n = a.arity();
    std::vector<unsigned> idx(n, 0);
    for (;;) {
        std::vector<Rational> point;
        point.reserve(n);
        for (unsigned v = 0; v < n; ++v) point.emplace_back(idx[v]);
        if (a.evaluate(point) != b.evaluate(point)) return false;
        unsigned v = 0;
        while (v < n && ++idx[v] == points) idx[v++] = 0;
        if (v == n) return true;
    }
}

// Builds a polynomial from (exponents, coefficient) pairs; the explicit
// expected values in the tests are written through this.
inline Polynomial poly_from_terms(
    unsigned arity,
    const std::vector<std::pair<std::vector<std::uint32_t>, long>>& terms)
{
    Polynomial p(arity);
    for (const auto& [exps, c] : terms) p.add_term(Monomial(exps), Rational(c));
    return p;
}

} // namespace opcal::test

#endif
