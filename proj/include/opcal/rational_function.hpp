#ifndef OPCAL_RATIONAL_FUNCTION_HPP
#define OPCAL_RATIONAL_FUNCTION_HPP

#include "opcal/polynomial.hpp"

namespace opcal {

// A fraction of polynomials kept exact without gcd reduction. Equality is
// decided by cross-multiplication; normalize() produces the reduced
// representative for display. The denominator is kept with positive
// grlex-leading coefficient.
class RationalFunction {
public:
    RationalFunction() : num_(1), den_(Polynomial::one(1)) {}
    explicit RationalFunction(Polynomial p);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction zero(unsigned arity);
    static RationalFunction one(unsigned arity);
    static RationalFunction constant(unsigned arity, const Rational& c);
    static RationalFunction variable(unsigned arity, unsigned index);

    unsigned arity() const { return num_.arity(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    friend RationalFunction operator*(RationalFunction f, const Rational& c)
    {
        f.num_ *= c;
        return f;
    }
    friend RationalFunction operator*(const Rational& c, RationalFunction f)
    {
        f.num_ *= c;
        return f;
    }

    // num1*den2 == num2*den1
    bool operator==(const RationalFunction& other) const;

    RationalFunction substitute(std::span<const Polynomial> assignments,
                                unsigned target_arity) const;
    RationalFunction embedded(unsigned target_arity, unsigned offset) const;

    // Divides out the gcd and the denominator content. After this the
    // denominator has coprime integer coefficients with positive leading
    // coefficient (and equals 1 when the value is a polynomial).
    RationalFunction normalize() const;

    bool is_polynomial() const;
    // Requires is_polynomial(); returns the reduced numerator.
    Polynomial to_polynomial() const;

    std::string str() const;

private:
    void fix_sign();

    Polynomial num_, den_;
};

} // namespace opcal

#endif
