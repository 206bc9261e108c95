#ifndef OPCAL_POLYNOMIAL_HPP
#define OPCAL_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "opcal/rational.hpp"

namespace opcal {

// Exponent vector of fixed length equal to the ambient arity.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(unsigned arity) : exps(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    unsigned arity() const { return static_cast<unsigned>(exps.size()); }
    unsigned degree() const
    {
        unsigned d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool is_unit() const { return degree() == 0; }

    Monomial times(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exps == other.exps; }
};

// Graded lexicographic order with x1 > x2 > ..., "greater" first, so that map
// iteration yields the leading term first. This is the order used for printing
// and for the denominator sign convention.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() : arity_(1) {}
    explicit Polynomial(unsigned arity);

    static Polynomial constant(unsigned arity, const Rational& c);
    static Polynomial one(unsigned arity) { return constant(arity, Rational(1)); }
    // index is 1-based: variable(3, 2) = x2 in K[x1,x2,x3].
    static Polynomial variable(unsigned arity, unsigned index);
    static Polynomial monomial(Monomial m, const Rational& c);

    unsigned arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    unsigned total_degree() const; // 0 for the zero polynomial
    unsigned degree_in(unsigned var) const;
    std::size_t term_count() const { return terms_.size(); }

    // Leading data under grlex; polynomial must be nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    bool operator==(const Polynomial& other) const
    {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }

    Polynomial pow(unsigned k) const;

    // Replaces xi by assignments[i-1]; every assignment must have the target
    // arity. This is the ring morphism K[x1..xn] -> K[x1..xm].
    Polynomial substitute(std::span<const Polynomial> assignments,
                          unsigned target_arity) const;
    // Same, discarding all terms of total degree > max_degree at every step.
    // Sound for truncated-series work as long as the assignments have zero
    // constant term.
    Polynomial substitute_truncated(std::span<const Polynomial> assignments,
                                    unsigned target_arity, unsigned max_degree) const;

    Polynomial truncated(unsigned max_degree) const;

    // x_j -> x_{j+offset} inside a larger variable set.
    Polynomial embedded(unsigned target_arity, unsigned offset) const;

    Polynomial derivative(unsigned var) const; // d/dx_var, 1-based

    Rational evaluate(std::span<const Rational> point) const;

    bool is_canonical() const; // no stored zero coefficients

    std::string str(bool spaces = true) const;

private:
    unsigned arity_;
    TermMap terms_;
};

} // namespace opcal

#endif
