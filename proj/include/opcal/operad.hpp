#ifndef OPCAL_OPERAD_HPP
#define OPCAL_OPERAD_HPP

#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "opcal/fgl.hpp"
#include "opcal/rational_function.hpp"

namespace opcal {

// A realization fixes the value space and the composition law.
//   AsDer(lambda): polynomials, composed through theta(lambda).
//   RatFct(F):     rational functions, composed through a commutative law F.
// Noncommutative laws are rejected here; they live in the preshuffle module.
class Realization {
public:
    enum class Kind { AsDer, RatFct };

    static Realization asder(const Rational& lambda = Rational(0));
    static Realization ratfct(FormalGroupLaw law);

    Kind kind() const { return kind_; }
    const Rational& lambda() const { return lambda_; }
    const FormalGroupLaw& law() const { return law_; }
    // False for a series-valued law, whose composition is only defined on
    // polynomial elements and lands in truncated series.
    bool polynomial_closed() const { return law_.polynomial_closed(); }
    std::string name() const;

    bool operator==(const Realization& other) const;

private:
    Realization(Kind kind, Rational lambda, FormalGroupLaw law);

    Kind kind_;
    Rational lambda_;
    FormalGroupLaw law_;
};

// Arity-tagged value in a chosen realization; the unit of all composition
// operations. AsDer values are polynomials, RatFct values rational functions.
class OperadElement {
public:
    static OperadElement asder(const Rational& lambda, Polynomial value);
    static OperadElement ratfct(FormalGroupLaw law, RationalFunction value);
    static OperadElement make(const Realization& r, Polynomial value);
    static OperadElement make(const Realization& r, RationalFunction value);
    static OperadElement identity(const Realization& r);

    const Realization& realization() const { return realization_; }
    unsigned arity() const { return arity_; }
    bool holds_polynomial() const { return std::holds_alternative<Polynomial>(value_); }
    const Polynomial& poly() const { return std::get<Polynomial>(value_); }
    const RationalFunction& ratfn() const { return std::get<RationalFunction>(value_); }

    std::string str() const;

    bool operator==(const OperadElement& other) const;

private:
    OperadElement(Realization r, unsigned arity,
                  std::variant<Polynomial, RationalFunction> value);

    Realization realization_;
    unsigned arity_;
    std::variant<Polynomial, RationalFunction> value_;
};

// (P o_i Q)(x1..x_{n+m-1}) =
//     P(x1,..,x_{i-1}, F(x_i..x_{i+m-1}), x_{i+m},..) * Q(x_i,..,x_{i+m-1})
OperadElement partial_compose(const OperadElement& P, unsigned i, const OperadElement& Q);

// Full composition by block substitution; equals the right-to-left iteration
// of partial compositions.
OperadElement gamma(const OperadElement& P, std::span<const OperadElement> Qs);

// (a o_i b) o_{i-1+j} c == a o_i (b o_j c)
bool check_axiom_I(const OperadElement& a, const OperadElement& b,
                   const OperadElement& c, unsigned i, unsigned j);
// (a o_i b) o_{k+m-1} c == (a o_k c) o_i b,  i < k, m = arity(b)
bool check_axiom_II(const OperadElement& a, const OperadElement& b,
                    const OperadElement& c, unsigned i, unsigned k);

// The eight pairwise compositions of x1, x2 in arity 2 under theta(lambda),
// in the order (x1 o1 x1), (x1 o1 x2), (x2 o1 x1), (x2 o1 x2),
//              (x1 o2 x1), (x1 o2 x2), (x2 o2 x1), (x2 o2 x2).
std::vector<std::pair<std::string, Polynomial>> dialgebra_table(const Rational& lambda);

// The two dialgebra identities with |- = x1, -| = x2:
//   x2 o1 x1 == x1 o2 x2
//   x1 o1 x2 + x2 o1 x2 == x1 o2 x1 + x2 o2 x1
std::pair<bool, bool> dialgebra_relations(const Rational& lambda);
bool dialgebra_relations_check(); // lambda = 0; both must hold

// Action of an AsDer(0) operation on the sample algebra (K[x], d/dx): the
// monomial x1^j1...xn^jn acts as (a1..an) -> D^j1(a1)...D^jn(an).
Polynomial evaluate_asder(const OperadElement& op, std::span<const Polynomial> args);

// sum_{n<=trunc} y^n/n! (d/dx)^n p(x) == p(x+y) in K[x,y]
bool shift_formula_check(const Polynomial& p, unsigned trunc);

// Seeded random element of the realization with the given arity.
OperadElement random_element(const Realization& r, std::mt19937_64& rng, unsigned arity,
                             unsigned max_degree, unsigned max_terms);

// Axioms I and II for `trials` random triples with arities <= max_arity and
// degrees <= max_degree, exhaustively over the valid index pairs.
bool operad_axioms_random_check(const Realization& r, std::uint64_t seed,
                                unsigned trials, unsigned max_arity = 3,
                                unsigned max_degree = 2);

// Unit axioms id o1 P == P == P oi id on random elements.
bool operad_unit_check(const Realization& r, std::uint64_t seed, unsigned trials);

// gamma agrees with the right-to-left iteration of partial compositions.
bool gamma_matches_nested_check(const Realization& r, std::uint64_t seed,
                                unsigned trials);

// evaluate(gamma(P;Qs), args) == evaluate(P, blockwise evaluate(Qs, args)).
bool evaluation_compatibility_check(std::uint64_t seed, unsigned trials);

} // namespace opcal

#endif
