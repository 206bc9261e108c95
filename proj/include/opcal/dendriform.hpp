#ifndef OPCAL_DENDRIFORM_HPP
#define OPCAL_DENDRIFORM_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "opcal/rational_function.hpp"

namespace opcal {

// Immutable planar binary tree; a tree with n+1 leaves has arity n.
class PlanarBinaryTree {
public:
    static PlanarBinaryTree leaf();
    static PlanarBinaryTree graft(PlanarBinaryTree left, PlanarBinaryTree right);

    bool is_leaf() const { return node_ == nullptr; }
    const PlanarBinaryTree& left() const;
    const PlanarBinaryTree& right() const;
    unsigned leaf_count() const;
    unsigned arity() const { return leaf_count() - 1; }

    std::string str() const; // "|" for a leaf, "(L^R)" for a graft

    bool operator==(const PlanarBinaryTree& other) const;

private:
    struct Node;
    std::shared_ptr<const Node> node_; // null for the leaf

    PlanarBinaryTree() = default;
    explicit PlanarBinaryTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

// All trees with n+1 leaves (arity n), in deterministic order by left size.
std::vector<PlanarBinaryTree> enumerate_pbt(unsigned n);

Integer catalan(unsigned n);

// phi(|) = 1 and, for s with p+1 leaves and t with q+1 leaves,
// phi(s v t) = phi(s)/(x1+..+xp) * phi(t)/(x_{p+2}+..+x_{p+q+1}).
RationalFunction phi(const PlanarBinaryTree& t);

// The denominator of phi(t) as a list of consecutive variable ranges [lo,hi].
std::vector<std::pair<unsigned, unsigned>>
phi_denominator_ranges(const PlanarBinaryTree& t);

// phi(s v t) computed by the grafting rule agrees with the composition
// gamma(1/x2; gamma(1/x1; phi(s), 1), phi(t)), for all trees with arity up to
// n_max; also verifies the eight pairwise compositions of 1/x1, 1/x2 and the
// three dendriform relations.
bool phi_is_morphism_check(unsigned n_max);

// Rank of { phi(t) : t in PBT_{n+1} } over Q after clearing denominators.
unsigned phi_rank(unsigned n);
bool phi_linear_independence(unsigned n); // rank == Catalan(n)

// The three dendriform relations as identities in RatFct arity 3.
bool dendriform_axioms_check();

// Phi = 1/x1 + 1/x2; Phi o1 Phi = Phi o2 Phi = (x1+x2+x3)/(x1*x2*x3).
bool star_associativity_check();
RationalFunction star_operation(); // Phi
RationalFunction star_composed(unsigned i);

// The seven relations of Prop 4.5 with > = 1/x1, < = 1/x2, . = 1 composed
// through theta(lambda).
bool tridendriform_check(const Rational& lambda);

// Mould composition: the rational-function composition times the extra
// linear factor (x_i + ... + x_{i+m-1}).
RationalFunction mould_compose(const RationalFunction& P, unsigned i,
                               const RationalFunction& Q);

// The transport P -> P/(x1+..+xn) intertwines the rational-function
// composition with the mould composition; its inverse multiplies back.
RationalFunction to_mould(const RationalFunction& P);
RationalFunction from_mould(const RationalFunction& P);

// M(P o_i Q) == M(P) ou_i M(Q) and from_mould(to_mould(P)) == P on random
// rational functions of arity <= max_arity.
bool mould_transport_check(std::mt19937_64& rng, unsigned trials, unsigned max_arity);

// The composition unit of the mould operad.
RationalFunction mould_identity();

struct MouldClosureReport {
    bool compositions_stay_polynomial; // ou_i of polynomials is polynomial
    RationalFunction unit;             // 1/x1
    bool unit_is_polynomial;           // false: the obstruction to a suboperad
    bool polynomial_unit_exists;       // search result over low-degree candidates
};
MouldClosureReport mould_polynomial_closure_witness(unsigned search_degree = 4);

} // namespace opcal

#endif
