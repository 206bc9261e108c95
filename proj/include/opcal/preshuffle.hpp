#ifndef OPCAL_PRESHUFFLE_HPP
#define OPCAL_PRESHUFFLE_HPP

#include <string>
#include <variant>

#include "opcal/fgl.hpp"
#include "opcal/ncpolynomial.hpp"

namespace opcal {

// Pre-shuffle composition keeps Axiom I and drops Axiom II; that is what
// survives when the operation spaces are noncommutative. Values are
// noncommutative polynomials under the additive law and truncated
// noncommutative series under the BCH law.
class PreShuffleElement {
public:
    static PreShuffleElement additive(NCPolynomial value);
    static PreShuffleElement with_law(FormalGroupLaw law, NCSeries value);
    static PreShuffleElement identity(const FormalGroupLaw& law);
    static PreShuffleElement identity_additive();

    const FormalGroupLaw& law() const { return law_; }
    unsigned arity() const { return arity_; }
    bool holds_polynomial() const { return std::holds_alternative<NCPolynomial>(value_); }
    const NCPolynomial& poly() const { return std::get<NCPolynomial>(value_); }
    const NCSeries& series() const { return std::get<NCSeries>(value_); }

    std::string str() const;

    bool operator==(const PreShuffleElement& other) const;

private:
    PreShuffleElement(FormalGroupLaw law, unsigned arity,
                      std::variant<NCPolynomial, NCSeries> value);

    FormalGroupLaw law_;
    unsigned arity_;
    std::variant<NCPolynomial, NCSeries> value_;
};

// (P .i Q)(x1..x_{n+m-1}) =
//     P(x1,..,x_{i-1}, F(x_i..x_{i+m-1}), ..) * Q(x_i..x_{i+m-1}),
// the product taken in the free associative algebra, P's letters first.
PreShuffleElement bullet_compose(const PreShuffleElement& P, unsigned i,
                                 const PreShuffleElement& Q);

// (a .i b) .{i-1+j} c == a .i (b .j c)
bool check_axiom_I_preshuffle(const PreShuffleElement& a, const PreShuffleElement& b,
                              const PreShuffleElement& c, unsigned i, unsigned j);

// Exhaustive over word monomials with arity <= max_arity, length <= max_len,
// and all valid index pairs. Exact for the additive law, truncated for BCH.
bool preshuffle_axiom_I_exhaustive(const FormalGroupLaw& law, unsigned max_arity,
                                   unsigned max_len);

// The four defining relations: associativity of mu, the Leibniz relation, and
// the two parallel-composition relations for alpha over word monomials of
// arity <= max_arity.
bool check_defining_relations(unsigned max_arity = 3, unsigned max_len = 2);

// Builds mu_n composed with D at the positions of the word and confirms the
// result is exactly that word monomial.
PreShuffleElement leveled_monomial(const Word& w, unsigned arity);
bool leveled_monomial_check(const Word& w, unsigned arity);

// A concrete Axiom II failure: (mu .1 D) .2 D = x1x2 while
// (mu .2 D) .1 D = x2x1.
struct AxiomIIWitness {
    PreShuffleElement lhs, rhs;
    std::string description;
    bool fails; // true when lhs != rhs, i.e. the witness is valid
};
AxiomIIWitness axiom_II_failure_witness();

// Applying the commutative quotient to P .i Q agrees with the AsDer partial
// composition of the abelianized elements.
bool abelianization_consistency_check(std::uint64_t seed, unsigned trials);

} // namespace opcal

#endif
