#ifndef OPCAL_HOMOTOPY_HPP
#define OPCAL_HOMOTOPY_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opcal/rational.hpp"

namespace opcal {

// ---------------------------------------------------------------------------
// The Koszul dual: two-dimensional in every arity, spanned by mu_n and dmu_n
// (with mu_1 = id and dmu_1 = d).

struct ShriekElement {
    unsigned arity;
    Rational mu;  // coefficient of mu_n
    Rational dmu; // coefficient of dmu_n

    static ShriekElement basis_mu(unsigned n) { return {n, Rational(1), Rational(0)}; }
    static ShriekElement basis_dmu(unsigned n) { return {n, Rational(0), Rational(1)}; }
    static ShriekElement zero(unsigned n) { return {n, Rational(0), Rational(0)}; }
    bool is_zero() const { return mu == 0 && dmu == 0; }
    bool operator==(const ShriekElement&) const = default;
    std::string str() const;
};

// mu_m o_i mu_n = mu_{m+n-1}, dmu o mu = mu o dmu = dmu_{m+n-1},
// dmu o dmu = 0, extended bilinearly.
ShriekElement shriek_compose(const ShriekElement& a, unsigned i, const ShriekElement& b);

// d o d = 0;  d o mu = mu o (d,id) = mu o (id,d);  mu o (mu,id) = mu o (id,mu).
bool shriek_relations_check();
// Operad axioms I and II over the basis {mu_n, dmu_n}, arities <= max_arity.
bool shriek_axioms_check(unsigned max_arity);

// ---------------------------------------------------------------------------
// Rewriting on tree monomials in the generators D (unary) and mu (binary).

class GenTree {
public:
    enum class Kind { Leaf, D, Mu };

    static GenTree leaf();
    static GenTree d(GenTree child);
    static GenTree mu(GenTree left, GenTree right);

    Kind kind() const;
    const GenTree& child() const;  // D
    const GenTree& left() const;   // Mu
    const GenTree& right() const;  // Mu
    unsigned leaf_count() const;
    unsigned weight() const; // number of generator nodes

    std::string str() const; // leaves x,y,z,t,...; D a, (a b)

    bool operator==(const GenTree& other) const;
    bool operator<(const GenTree& other) const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    GenTree() = default;
    explicit GenTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::string str_leaf_names(unsigned& next) const;
};

using GenTermSum = std::map<GenTree, Rational>;

std::string gen_sum_str(const GenTermSum& s);

struct RewriteRule {
    std::string name;
    // Match at the root of the subtree; return the replacement on success.
    std::function<std::optional<GenTermSum>(const GenTree&)> apply_at_root;
};

// mu o1 mu -> mu o2 mu  and  D o1 mu -> mu o1 D + mu o2 D
std::vector<RewriteRule> asder_rewrite_rules();
// D o1 mu -> mu o1 D (the second Leibniz summand dropped); the mu rule kept.
std::vector<RewriteRule> one_sided_leibniz_rules();
// D o1 mu -> mu o1 D - mu o2 D; the mu rule kept. Genuinely non-confluent.
std::vector<RewriteRule> sign_broken_rules();

enum class RewriteStrategy { Outermost, Innermost };

struct NormalizeResult {
    GenTermSum normal_form;
    std::vector<GenTermSum> chain; // successive sums, starting at the input
    bool terminated;               // false if the step limit was hit
    bool measure_decreased;        // every step strictly decreased the order
};

// (D-over-mu inversion count, total left weight of mu nodes): both rewrite
// rules strictly decrease this lexicographic measure, which gives termination.
std::pair<unsigned, unsigned> termination_measure(const GenTree& t);

NormalizeResult normalize(const GenTermSum& start, const std::vector<RewriteRule>& rules,
                          RewriteStrategy strategy, unsigned max_steps = 10000);

struct CriticalMonomialReport {
    GenTree monomial;
    bool confluent; // all one-step reducts share one normal form
    GenTermSum normal_form_outermost;
    GenTermSum normal_form_innermost;
    std::vector<GenTermSum> chain_outermost;
    std::vector<GenTermSum> chain_innermost;
};

struct ConfluenceReport {
    std::vector<CriticalMonomialReport> monomials;
    bool all_confluent;
    bool terminated;
};

// The two overlaps mu o1 (mu o1 mu) and D o1 (mu o1 mu), normalized from
// every one-step reduct.
ConfluenceReport critical_monomial_confluence(const std::vector<RewriteRule>& rules);

// Every tree monomial of weight <= max_weight normalizes with strictly
// decreasing measure at each step.
bool rewrite_termination_check(unsigned max_weight);

// ---------------------------------------------------------------------------
// The minimal model: free operad on D, m_k, Dm_k with the square-zero
// differential.

struct GenLabel {
    enum class Kind { D, M, DM };
    Kind kind;
    unsigned k; // 1 for D; the arity for M/DM (k >= 2)

    static GenLabel der() { return {Kind::D, 1}; }
    static GenLabel m(unsigned k) { return {Kind::M, k}; }
    static GenLabel dm(unsigned k) { return {Kind::DM, k}; }

    unsigned arity() const { return kind == Kind::D ? 1 : k; }
    // Homological degree: D is 0, m_k is k-2, Dm_k is k-1. These are the
    // gradings for which the boundary has degree exactly -1.
    unsigned degree() const
    {
        switch (kind) {
        case Kind::D: return 0;
        case Kind::M: return k - 2;
        case Kind::DM: return k - 1;
        }
        return 0;
    }
    std::string str() const;
    auto operator<=>(const GenLabel&) const = default;
};

// Planar rooted tree whose internal nodes carry generator labels matching
// their input count; total degree is the sum of the label degrees.
class LabelledTree {
public:
    static LabelledTree leaf();
    static LabelledTree node(GenLabel label, std::vector<LabelledTree> children);
    static LabelledTree corolla(GenLabel label);

    bool is_leaf() const { return !label_.has_value(); }
    const GenLabel& label() const;
    const std::vector<LabelledTree>& children() const { return children_; }
    unsigned leaf_count() const;
    unsigned degree() const;

    std::string str() const; // e.g. M3(D(leaf),leaf,DM2(leaf,leaf))

    bool operator==(const LabelledTree& other) const;
    bool operator<(const LabelledTree& other) const;

private:
    LabelledTree() = default;
    std::optional<GenLabel> label_;
    std::vector<LabelledTree> children_;
};

using TreeSum = std::map<LabelledTree, Rational>;

std::string tree_sum_str(const TreeSum& s);

// Boundary of a single generator as a sum of two-level trees.
TreeSum generator_boundary(const GenLabel& g);

// Degree -1 differential, extended to trees as a derivation with the sign
// (-1)^{sum of degrees of the labels preceding the node in leftmost
// depth-first order}.
TreeSum differential(const LabelledTree& t);
TreeSum differential(const TreeSum& s);

// boundary(boundary(g)) == 0 for every generator of arity <= max_arity.
bool d_squared_check(unsigned max_arity);

} // namespace opcal

#endif
