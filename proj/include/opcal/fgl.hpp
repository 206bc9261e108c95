#ifndef OPCAL_FGL_HPP
#define OPCAL_FGL_HPP

#include <optional>
#include <string>

#include "opcal/ncpolynomial.hpp"
#include "opcal/polynomial.hpp"

namespace opcal {

enum class LawKind {
    Polynomial, // F is a polynomial in two variables; composition stays polynomial
    Series,     // F is a commutative series truncated in total degree
    NCSeries    // F is a noncommutative series truncated in word length
};

// A two-variable formal group law F with F(x,0) = x = F(0,y), together with
// its n-fold extension F(x1,...,xn) = F(F(x1,...,x_{n-1}), xn).
class FormalGroupLaw {
public:
    static FormalGroupLaw additive();
    // theta(lambda)(x,y) = x + y + lambda*x*y
    static FormalGroupLaw theta(const Rational& lambda);
    // Series expansion of (x*sqrt(Q(y)) + y*sqrt(Q(x))) / (1 - eps*x^2*y^2)
    // with Q(t) = 1 - 2*delta*t^2 + eps*t^4, truncated in total degree.
    static FormalGroupLaw jacobi(const Rational& delta, const Rational& epsilon,
                                 unsigned trunc);
    // log(exp(x)*exp(y)) in noncommuting x, y, truncated in word length.
    static FormalGroupLaw bch(unsigned trunc);

    LawKind kind() const { return kind_; }
    bool polynomial_closed() const { return kind_ == LawKind::Polynomial; }
    unsigned truncation_degree() const { return trunc_; }
    const std::string& name() const { return name_; }

    const Polynomial& two_variable() const;   // Polynomial / Series kinds
    const NCSeries& two_variable_nc() const;  // NCSeries kind

    // Left-iterated law; n = 1 gives x1. Truncated for the series kinds.
    Polynomial nfold(unsigned n) const;
    NCSeries nfold_nc(unsigned n) const;
    // The additive law read in noncommuting variables: x1 + ... + xn.
    NCPolynomial nfold_ncpoly(unsigned n) const;

    // F(F(x1,x2),x3) - F(x1,F(x2,x3)), zero (up to truncation) iff associative.
    Polynomial associativity_defect() const;
    NCSeries associativity_defect_nc() const;

    // F(x,0) = x = F(0,y), exactly or up to the truncation degree.
    bool unit_axioms_hold() const;

    bool operator==(const FormalGroupLaw& other) const;

private:
    FormalGroupLaw(LawKind kind, Polynomial f, unsigned trunc, std::string name);
    FormalGroupLaw(NCSeries f, std::string name);

    LawKind kind_;
    Polynomial poly_; // arity 2; unused for NCSeries kind
    std::optional<NCSeries> nc_;
    unsigned trunc_ = 0;
    std::string name_;
};

// Sum of all squarefree degree-k monomials in n variables, 1 <= k <= n.
Polynomial elementary_symmetric(unsigned k, unsigned n);

// theta^lambda(x1..xn) = sum_k lambda^{k-1} * e_k(x1..xn), the closed form of
// the n-fold theta law.
Polynomial theta_lambda_closed_form(const Rational& lambda, unsigned n);

} // namespace opcal

#endif
