#ifndef OPCAL_RANDOM_GEN_HPP
#define OPCAL_RANDOM_GEN_HPP

#include <random>

#include "opcal/ncpolynomial.hpp"
#include "opcal/rational_function.hpp"

namespace opcal {

// Seeded, engine-output-only randomness so that a fixed seed reproduces the
// same values on any platform.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n)
{
    return rng() % n;
}

inline Rational random_coeff(std::mt19937_64& rng, long bound)
{
    long c = static_cast<long>(rand_below(rng, 2 * bound)) - bound;
    if (c >= 0) ++c; // skip zero
    return Rational(c);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, unsigned arity,
                                    unsigned max_degree, unsigned max_terms,
                                    long coeff_bound = 5)
{
    Polynomial p(arity);
    unsigned terms = 1 + static_cast<unsigned>(rand_below(rng, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m(arity);
        for (;;) {
            for (unsigned v = 0; v < arity; ++v)
                m.exps[v] = static_cast<std::uint32_t>(rand_below(rng, max_degree + 1));
            if (m.degree() <= max_degree) break;
        }
        p.add_term(m, random_coeff(rng, coeff_bound));
    }
    return p;
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, unsigned arity,
                                            unsigned max_degree, unsigned max_terms,
                                            long coeff_bound = 5)
{
    for (;;) {
        Polynomial p = random_polynomial(rng, arity, max_degree, max_terms, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunction random_rational_function(std::mt19937_64& rng, unsigned arity,
                                                 unsigned max_degree = 2,
                                                 unsigned max_terms = 3)
{
    Polynomial num = random_polynomial(rng, arity, max_degree, max_terms);
    Polynomial den = random_nonzero_polynomial(rng, arity, 1, 2, 3);
    return RationalFunction(std::move(num), std::move(den));
}

inline NCPolynomial random_nc_polynomial(std::mt19937_64& rng, unsigned arity,
                                         unsigned max_length, unsigned max_terms,
                                         long coeff_bound = 5)
{
    NCPolynomial p(arity);
    unsigned terms = 1 + static_cast<unsigned>(rand_below(rng, max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        Word w;
        unsigned len = static_cast<unsigned>(rand_below(rng, max_length + 1));
        for (unsigned k = 0; k < len; ++k)
            w.letters.push_back(1 + static_cast<std::uint32_t>(rand_below(rng, arity)));
        p.add_term(w, random_coeff(rng, coeff_bound));
    }
    return p;
}

} // namespace opcal

#endif
