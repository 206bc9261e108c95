#include "opcal/poly_gcd.hpp"

#include <map>
#include <stdexcept>

namespace opcal {

namespace {

bool monomial_divides(const Monomial& d, const Monomial& m)
{
    for (std::size_t i = 0; i < d.exps.size(); ++i)
        if (d.exps[i] > m.exps[i]) return false;
    return true;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d)
{
    Monomial q = m;
    for (std::size_t i = 0; i < d.exps.size(); ++i) q.exps[i] -= d.exps[i];
    return q;
}

unsigned smallest_variable(const Polynomial& a, const Polynomial& b)
{
    for (unsigned v = 1; v <= a.arity(); ++v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return 0;
}

// Coefficients of a viewed as a univariate polynomial in x_v; the returned
// polynomials are free of x_v.
std::map<unsigned, Polynomial> coefficients_in(const Polynomial& a, unsigned v)
{
    std::map<unsigned, Polynomial> out;
    for (const auto& [m, c] : a.terms()) {
        unsigned e = m.exps[v - 1];
        Monomial rest = m;
        rest.exps[v - 1] = 0;
        auto [it, inserted] = out.emplace(e, Polynomial(a.arity()));
        it->second.add_term(rest, c);
    }
    return out;
}

Polynomial content_in(const Polynomial& a, unsigned v)
{
    Polynomial g(a.arity());
    for (const auto& [e, coeff] : coefficients_in(a, v)) g = poly_gcd(g, coeff);
    return g;
}

Polynomial times_var_power(const Polynomial& p, unsigned v, unsigned e)
{
    Monomial m(p.arity());
    m.exps[v - 1] = e;
    return p * Polynomial::monomial(m, Rational(1));
}

// Pseudo-remainder of a by b in the variable x_v (deg_v b >= 1).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, unsigned v)
{
    unsigned db = b.degree_in(v);
    auto bc = coefficients_in(b, v);
    const Polynomial& lb = bc.at(db);
    Polynomial r = a;
    while (!r.is_zero()) {
        unsigned dr = r.degree_in(v);
        if (dr < db) break;
        Polynomial lr(a.arity());
        for (const auto& [m, c] : r.terms())
            if (m.exps[v - 1] == dr) {
                Monomial rest = m;
                rest.exps[v - 1] = 0;
                lr.add_term(rest, c);
            }
        r = lb * r - times_var_power(lr, v, dr - db) * b;
    }
    return r;
}

} // namespace

Polynomial poly_divexact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.arity() != b.arity()) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial q(a.arity());
    Polynomial r = a;
    while (!r.is_zero()) {
        const Monomial& lm = r.leading_monomial();
        if (!monomial_divides(b.leading_monomial(), lm))
            throw std::domain_error("poly_divexact: not divisible");
        Polynomial t = Polynomial::monomial(monomial_quotient(lm, b.leading_monomial()),
                                            r.leading_coeff() / b.leading_coeff());
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial poly_primitive(const Polynomial& a)
{
    if (a.is_zero()) return a;
    Integer lcm_den(1), gcd_num(0);
    for (const auto& [m, c] : a.terms())
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    for (const auto& [m, c] : a.terms()) {
        Integer n = numerator(c) * (lcm_den / denominator(c));
        gcd_num = boost::multiprecision::gcd(gcd_num, n);
    }
    Rational scale(lcm_den, gcd_num);
    Polynomial r = a * scale;
    if (r.leading_coeff() < 0) r *= Rational(-1);
    return r;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.arity() != b.arity()) throw std::invalid_argument("polynomial arity mismatch");
    if (a.is_zero()) return poly_primitive(b);
    if (b.is_zero()) return poly_primitive(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::one(a.arity());

    unsigned v = smallest_variable(a, b);
    if (a.degree_in(v) == 0) return poly_gcd(content_in(b, v), a);
    if (b.degree_in(v) == 0) return poly_gcd(content_in(a, v), b);

    Polynomial ca = content_in(a, v);
    Polynomial cb = content_in(b, v);
    Polynomial pa = poly_divexact(a, ca);
    Polynomial pb = poly_divexact(b, cb);
    Polynomial c = poly_gcd(ca, cb);

    // Primitive PRS on the primitive parts.
    for (;;) {
        if (pb.is_zero()) break;
        if (pb.degree_in(v) == 0) return poly_primitive(c);
        if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
        Polynomial r = pseudo_remainder(pa, pb, v);
        pa = pb;
        if (r.is_zero())
            pb = r;
        else
            pb = poly_divexact(r, content_in(r, v));
    }
    return poly_primitive(c * pa);
}

} // namespace opcal
