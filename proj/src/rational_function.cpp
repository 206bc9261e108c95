#include "opcal/rational_function.hpp"

#include <sstream>
#include <stdexcept>

#include "opcal/poly_gcd.hpp"

namespace opcal {

RationalFunction::RationalFunction(Polynomial p)
    : num_(std::move(p)), den_(Polynomial::one(num_.arity()))
{
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (num_.arity() != den_.arity())
        throw std::invalid_argument("rational function arity mismatch");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    fix_sign();
}

void RationalFunction::fix_sign()
{
    if (den_.leading_coeff() < 0) {
        den_ *= Rational(-1);
        num_ *= Rational(-1);
    }
}

RationalFunction RationalFunction::zero(unsigned arity)
{
    return RationalFunction(Polynomial(arity));
}

RationalFunction RationalFunction::one(unsigned arity)
{
    return RationalFunction(Polynomial::one(arity));
}

RationalFunction RationalFunction::constant(unsigned arity, const Rational& c)
{
    return RationalFunction(Polynomial::constant(arity, c));
}

RationalFunction RationalFunction::variable(unsigned arity, unsigned index)
{
    return RationalFunction(Polynomial::variable(arity, index));
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::operator==(const RationalFunction& other) const
{
    return num_ * other.den_ == other.num_ * den_;
}

RationalFunction RationalFunction::substitute(std::span<const Polynomial> assignments,
                                              unsigned target_arity) const
{
    Polynomial n = num_.substitute(assignments, target_arity);
    Polynomial d = den_.substitute(assignments, target_arity);
    if (d.is_zero())
        throw std::domain_error("substitution sends denominator to zero");
    return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::embedded(unsigned target_arity, unsigned offset) const
{
    return RationalFunction(num_.embedded(target_arity, offset),
                            den_.embedded(target_arity, offset));
}

RationalFunction RationalFunction::normalize() const
{
    if (num_.is_zero()) return zero(arity());
    Polynomial g = poly_gcd(num_, den_);
    Polynomial n = poly_divexact(num_, g);
    Polynomial d = poly_divexact(den_, g);
    // Scale so the denominator is integer-primitive with positive lead.
    Polynomial dp = poly_primitive(d);
    Rational scale = dp.leading_coeff() / d.leading_coeff();
    return RationalFunction(n * scale, std::move(dp));
}

bool RationalFunction::is_polynomial() const
{
    if (num_.is_zero()) return true;
    RationalFunction r = normalize();
    return r.den_.is_constant();
}

Polynomial RationalFunction::to_polynomial() const
{
    if (num_.is_zero()) return Polynomial(arity());
    RationalFunction r = normalize();
    if (!r.den_.is_constant())
        throw std::domain_error("rational function is not a polynomial");
    return r.num_ * (Rational(1) / r.den_.constant_term());
}

namespace {

// A side of the fraction can be written without parentheses only when it is
// a single factor: a constant, or a power of one variable with coefficient 1.
bool bare_printable(const Polynomial& p)
{
    if (p.term_count() != 1) return p.is_zero();
    const auto& [m, c] = *p.terms().begin();
    if (m.is_unit()) return true;
    if (c != 1) return false;
    unsigned nonzero = 0;
    for (auto e : m.exps)
        if (e > 0) ++nonzero;
    return nonzero == 1;
}

std::string side_str(const Polynomial& p)
{
    if (bare_printable(p)) return p.str(false);
    return "(" + p.str(false) + ")";
}

} // namespace

std::string RationalFunction::str() const
{
    if (den_.is_constant() && den_.constant_term() == 1) return num_.str();
    std::ostringstream out;
    out << side_str(num_) << "/" << side_str(den_);
    return out.str();
}

} // namespace opcal
