#include "opcal/dendriform.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "opcal/operad.hpp"
#include "opcal/random_gen.hpp"

namespace opcal {

struct PlanarBinaryTree::Node {
    PlanarBinaryTree left, right;
    unsigned leaves;
};

PlanarBinaryTree PlanarBinaryTree::leaf() { return PlanarBinaryTree(); }

PlanarBinaryTree PlanarBinaryTree::graft(PlanarBinaryTree left, PlanarBinaryTree right)
{
    unsigned leaves = left.leaf_count() + right.leaf_count();
    auto node = std::make_shared<const Node>(Node{std::move(left), std::move(right), leaves});
    return PlanarBinaryTree(std::move(node));
}

const PlanarBinaryTree& PlanarBinaryTree::left() const
{
    if (!node_) throw std::logic_error("leaf has no children");
    return node_->left;
}

const PlanarBinaryTree& PlanarBinaryTree::right() const
{
    if (!node_) throw std::logic_error("leaf has no children");
    return node_->right;
}

unsigned PlanarBinaryTree::leaf_count() const { return node_ ? node_->leaves : 1; }

std::string PlanarBinaryTree::str() const
{
    if (is_leaf()) return "|";
    return "(" + left().str() + "^" + right().str() + ")";
}

bool PlanarBinaryTree::operator==(const PlanarBinaryTree& other) const
{
    if (is_leaf() || other.is_leaf()) return is_leaf() == other.is_leaf();
    return left() == other.left() && right() == other.right();
}

namespace {

// All trees with exactly `leaves` leaves.
std::vector<PlanarBinaryTree> trees_with_leaves(unsigned leaves)
{
    if (leaves == 1) return {PlanarBinaryTree::leaf()};
    std::vector<PlanarBinaryTree> out;
    for (unsigned l = 1; l < leaves; ++l)
        for (const auto& s : trees_with_leaves(l))
            for (const auto& t : trees_with_leaves(leaves - l))
                out.push_back(PlanarBinaryTree::graft(s, t));
    return out;
}

Polynomial linear_form(unsigned arity, unsigned lo, unsigned hi)
{
    Polynomial p(arity);
    for (unsigned v = lo; v <= hi; ++v) p += Polynomial::variable(arity, v);
    return p;
}

} // namespace

std::vector<PlanarBinaryTree> enumerate_pbt(unsigned n)
{
    if (n < 1) throw std::invalid_argument("enumerate_pbt: arity must be >= 1");
    return trees_with_leaves(n + 1);
}

Integer catalan(unsigned n)
{
    Integer num(1), den(1);
    for (unsigned k = 1; k <= n; ++k) {
        num *= (n + k);
        den *= k;
    }
    return num / den / (n + 1);
}

std::vector<std::pair<unsigned, unsigned>>
phi_denominator_ranges(const PlanarBinaryTree& t)
{
    if (t.is_leaf() || t.arity() == 0) return {};
    std::vector<std::pair<unsigned, unsigned>> out;
    unsigned p = t.left().arity();
    unsigned q = t.right().arity();
    if (p > 0) {
        out.emplace_back(1, p);
        for (auto [lo, hi] : phi_denominator_ranges(t.left())) out.emplace_back(lo, hi);
    }
    if (q > 0) {
        out.emplace_back(p + 2, p + q + 1);
        for (auto [lo, hi] : phi_denominator_ranges(t.right()))
            out.emplace_back(lo + p + 1, hi + p + 1);
    }
    return out;
}

RationalFunction phi(const PlanarBinaryTree& t)
{
    if (t.is_leaf())
        throw std::invalid_argument("phi image of the bare leaf has arity 0");
    unsigned n = t.arity();
    Polynomial den = Polynomial::one(n);
    for (auto [lo, hi] : phi_denominator_ranges(t)) den *= linear_form(n, lo, hi);
    return RationalFunction(Polynomial::one(n), std::move(den));
}

namespace {

OperadElement rf_elem(RationalFunction v)
{
    return OperadElement::ratfct(FormalGroupLaw::additive(), std::move(v));
}

RationalFunction reciprocal_var(unsigned arity, unsigned index)
{
    return RationalFunction(Polynomial::one(arity), Polynomial::variable(arity, index));
}

RationalFunction rf_compose(const RationalFunction& P, unsigned i, const RationalFunction& Q)
{
    return partial_compose(rf_elem(P), i, rf_elem(Q)).ratfn();
}

} // namespace

bool dendriform_axioms_check()
{
    RationalFunction succ = reciprocal_var(2, 1);
    RationalFunction prec = reciprocal_var(2, 2);
    // (a<b)<c = a<(b<c + b>c)
    bool r1 = rf_compose(prec, 1, prec) == rf_compose(prec, 2, prec + succ);
    // (a>b)<c = a>(b<c)
    bool r2 = rf_compose(prec, 1, succ) == rf_compose(succ, 2, prec);
    // (a<b + a>b)>c = a>(b>c)
    bool r3 = rf_compose(succ, 1, prec + succ) == rf_compose(succ, 2, succ);
    return r1 && r2 && r3;
}

bool phi_is_morphism_check(unsigned n_max)
{
    if (n_max < 2) throw std::invalid_argument("phi_is_morphism_check: n_max >= 2");

    // The eight pairwise compositions from the proof table.
    RationalFunction succ = reciprocal_var(2, 1);
    RationalFunction prec = reciprocal_var(2, 2);
    auto frac = [](unsigned lo1, unsigned hi1, unsigned v2) {
        Polynomial den = linear_form(3, lo1, hi1) * Polynomial::variable(3, v2);
        return RationalFunction(Polynomial::one(3), std::move(den));
    };
    bool table = rf_compose(succ, 1, succ) == frac(1, 2, 1) &&
                 rf_compose(succ, 1, prec) == frac(1, 2, 2) &&
                 rf_compose(prec, 1, succ) == frac(3, 3, 1) &&
                 rf_compose(prec, 1, prec) == frac(3, 3, 2) &&
                 rf_compose(succ, 2, succ) == frac(1, 1, 2) &&
                 rf_compose(succ, 2, prec) == frac(1, 1, 3) &&
                 rf_compose(prec, 2, succ) == frac(2, 3, 2) &&
                 rf_compose(prec, 2, prec) == frac(2, 3, 3);
    if (!table || !dendriform_axioms_check()) return false;

    // phi(s v t) = (phi(s) > Y) < phi(u) through operadic composition, with
    // the leaf cases reading Y > and < as the formal-unit conventions.
    for (unsigned n = 1; n <= n_max; ++n) {
        for (const auto& t : enumerate_pbt(n)) {
            const auto& s = t.left();
            const auto& u = t.right();
            unsigned p = s.arity(), q = u.arity();
            RationalFunction via_compose = [&]() -> RationalFunction {
                if (p == 0 && q == 0) return RationalFunction::one(1);
                if (p == 0) return rf_compose(prec, 2, phi(u));
                RationalFunction sy = rf_compose(succ, 1, phi(s)); // arity p+1
                if (q == 0) return sy;
                return rf_compose(rf_compose(prec, 1, sy), p + 2, phi(u));
            }();
            if (!(via_compose == phi(t))) return false;
        }
    }
    return true;
}

unsigned phi_rank(unsigned n)
{
    auto trees = enumerate_pbt(n);

    // Multiset of denominator factors per tree and their union.
    std::map<std::pair<unsigned, unsigned>, unsigned> all;
    std::vector<std::map<std::pair<unsigned, unsigned>, unsigned>> per_tree;
    for (const auto& t : trees) {
        std::map<std::pair<unsigned, unsigned>, unsigned> mine;
        for (auto r : phi_denominator_ranges(t)) ++mine[r];
        for (const auto& [r, c] : mine)
            if (all[r] < c) all[r] = c;
        per_tree.push_back(std::move(mine));
    }

    // Clear denominators: row_t = prod of the missing factors.
    std::vector<Polynomial> rows;
    for (const auto& mine : per_tree) {
        Polynomial p = Polynomial::one(n);
        for (const auto& [r, c] : all) {
            auto it = mine.find(r);
            unsigned have = it == mine.end() ? 0 : it->second;
            for (unsigned k = have; k < c; ++k) p *= linear_form(n, r.first, r.second);
        }
        rows.push_back(std::move(p));
    }

    // Exact rank over Q.
    std::map<Monomial, unsigned, GrlexGreater> columns;
    for (const auto& p : rows)
        for (const auto& [m, c] : p.terms())
            columns.emplace(m, 0);
    unsigned idx = 0;
    for (auto& [m, col] : columns) col = idx++;

    std::vector<std::vector<Rational>> mat;
    for (const auto& p : rows) {
        std::vector<Rational> row(columns.size(), Rational(0));
        for (const auto& [m, c] : p.terms()) row[columns.at(m)] = c;
        mat.push_back(std::move(row));
    }

    unsigned rank = 0;
    unsigned cols = static_cast<unsigned>(columns.size());
    for (unsigned col = 0; col < cols && rank < mat.size(); ++col) {
        unsigned pivot = rank;
        while (pivot < mat.size() && mat[pivot][col] == 0) ++pivot;
        if (pivot == mat.size()) continue;
        std::swap(mat[rank], mat[pivot]);
        for (unsigned r = rank + 1; r < mat.size(); ++r) {
            if (mat[r][col] == 0) continue;
            Rational f = mat[r][col] / mat[rank][col];
            for (unsigned c2 = col; c2 < cols; ++c2) mat[r][c2] -= f * mat[rank][c2];
        }
        ++rank;
    }
    return rank;
}

bool phi_linear_independence(unsigned n)
{
    return Integer(phi_rank(n)) == catalan(n);
}

RationalFunction star_operation()
{
    return reciprocal_var(2, 1) + reciprocal_var(2, 2);
}

RationalFunction star_composed(unsigned i)
{
    RationalFunction s = star_operation();
    return rf_compose(s, i, s);
}

bool star_associativity_check()
{
    RationalFunction expected(linear_form(3, 1, 3),
                              Polynomial::variable(3, 1) * Polynomial::variable(3, 2) *
                                  Polynomial::variable(3, 3));
    RationalFunction s = star_operation();
    bool unit = rf_compose(s, 1, RationalFunction::one(1)) == s;
    return unit && star_composed(1) == expected && star_composed(2) == expected;
}

bool tridendriform_check(const Rational& lambda)
{
    FormalGroupLaw law = FormalGroupLaw::theta(lambda);
    auto elem = [&](RationalFunction v) {
        return OperadElement::ratfct(law, std::move(v));
    };
    RationalFunction succ = reciprocal_var(2, 1);
    RationalFunction prec = reciprocal_var(2, 2);
    RationalFunction dot = RationalFunction::one(2);
    RationalFunction star = prec + succ + dot * lambda;
    auto cmp = [&](const RationalFunction& a, unsigned ia, const RationalFunction& b,
                   const RationalFunction& c, unsigned ic, const RationalFunction& d) {
        return partial_compose(elem(a), ia, elem(b)) ==
               partial_compose(elem(c), ic, elem(d));
    };
    return cmp(prec, 1, prec, prec, 2, star) &&  // (x<y)<z = x<(y*z)
           cmp(prec, 1, succ, succ, 2, prec) &&  // (x>y)<z = x>(y<z)
           cmp(succ, 1, star, succ, 2, succ) &&  // (x*y)>z = x>(y>z)
           cmp(dot, 1, succ, succ, 2, dot) &&    // (x>y).z = x>(y.z)
           cmp(dot, 1, prec, dot, 2, succ) &&    // (x<y).z = x.(y>z)
           cmp(prec, 1, dot, dot, 2, prec) &&    // (x.y)<z = x.(y<z)
           cmp(dot, 1, dot, dot, 2, dot);        // (x.y).z = x.(y.z)
}

RationalFunction mould_compose(const RationalFunction& P, unsigned i,
                               const RationalFunction& Q)
{
    if (i < 1 || i > P.arity()) throw std::invalid_argument("mould: index out of range");
    unsigned n = P.arity(), m = Q.arity();
    RationalFunction base = rf_compose(P, i, Q);
    return base * RationalFunction(linear_form(n + m - 1, i, i + m - 1));
}

RationalFunction to_mould(const RationalFunction& P)
{
    return P / RationalFunction(linear_form(P.arity(), 1, P.arity()));
}

RationalFunction from_mould(const RationalFunction& P)
{
    return P * RationalFunction(linear_form(P.arity(), 1, P.arity()));
}

bool mould_transport_check(std::mt19937_64& rng, unsigned trials, unsigned max_arity)
{
    for (unsigned t = 0; t < trials; ++t) {
        unsigned n = 1 + static_cast<unsigned>(rand_below(rng, max_arity));
        unsigned m = 1 + static_cast<unsigned>(rand_below(rng, max_arity));
        unsigned i = 1 + static_cast<unsigned>(rand_below(rng, n));
        RationalFunction P = random_rational_function(rng, n);
        RationalFunction Q = random_rational_function(rng, m);
        if (!(from_mould(to_mould(P)) == P)) return false;
        RationalFunction lhs = to_mould(rf_compose(P, i, Q));
        RationalFunction rhs = mould_compose(to_mould(P), i, to_mould(Q));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

RationalFunction mould_identity()
{
    return to_mould(RationalFunction::one(1)); // = 1/x1
}

MouldClosureReport mould_polynomial_closure_witness(unsigned search_degree)
{
    MouldClosureReport report{true, mould_identity(), false, false};
    report.unit_is_polynomial = report.unit.is_polynomial();

    // ou_i keeps polynomials polynomial: substitution, product and the extra
    // linear factor never introduce a denominator.
    for (unsigned n = 1; n <= 2 && report.compositions_stay_polynomial; ++n)
        for (unsigned m = 1; m <= 2; ++m)
            for (unsigned i = 1; i <= n; ++i) {
                RationalFunction P(Polynomial::variable(n, 1).pow(2) +
                                   Polynomial::variable(n, n));
                RationalFunction Q(Polynomial::variable(m, m));
                if (!mould_compose(P, i, Q).is_polynomial()) {
                    report.compositions_stay_polynomial = false;
                    break;
                }
            }

    // A polynomial unit e would need e ou_1 x1 == x1 in arity 1, i.e.
    // x1^2 * e(x1) == x1; no polynomial of degree <= search_degree works.
    RationalFunction x1(Polynomial::variable(1, 1));
    for (unsigned d = 0; d <= search_degree && !report.polynomial_unit_exists; ++d) {
        for (long num = -4; num <= 4; ++num) {
            if (num == 0) continue;
            RationalFunction e(Polynomial::variable(1, 1).pow(d) * Rational(num, 2));
            if (mould_compose(e, 1, x1) == x1 && mould_compose(x1, 1, e) == x1) {
                report.polynomial_unit_exists = true;
                break;
            }
        }
    }
    return report;
}

} // namespace opcal
