#include "opcal/preshuffle.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "opcal/operad.hpp"
#include "opcal/random_gen.hpp"

namespace opcal {

namespace {

bool is_additive(const FormalGroupLaw& law)
{
    return law.kind() == LawKind::Polynomial && law == FormalGroupLaw::additive();
}

std::vector<Word> words_up_to(unsigned arity, unsigned max_len)
{
    std::vector<Word> out{Word()};
    std::vector<Word> frontier{Word()};
    for (unsigned l = 1; l <= max_len; ++l) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (unsigned letter = 1; letter <= arity; ++letter) {
                Word e = w;
                e.letters.push_back(letter);
                next.push_back(e);
                out.push_back(std::move(e));
            }
        frontier = std::move(next);
    }
    return out;
}

} // namespace

PreShuffleElement::PreShuffleElement(FormalGroupLaw law, unsigned arity,
                                     std::variant<NCPolynomial, NCSeries> value)
    : law_(std::move(law)), arity_(arity), value_(std::move(value))
{
}

PreShuffleElement PreShuffleElement::additive(NCPolynomial value)
{
    unsigned n = value.arity();
    return PreShuffleElement(FormalGroupLaw::additive(), n, std::move(value));
}

PreShuffleElement PreShuffleElement::with_law(FormalGroupLaw law, NCSeries value)
{
    if (law.kind() != LawKind::NCSeries)
        throw std::invalid_argument(
            "series elements need a noncommutative law; use additive() for polynomials");
    if (law.truncation_degree() != value.truncation_degree())
        throw std::invalid_argument("truncation degree mismatch between law and value");
    unsigned n = value.arity();
    return PreShuffleElement(std::move(law), n, std::move(value));
}

PreShuffleElement PreShuffleElement::identity(const FormalGroupLaw& law)
{
    if (law.kind() == LawKind::NCSeries)
        return with_law(law, NCSeries::one(1, law.truncation_degree()));
    if (!is_additive(law))
        throw std::invalid_argument("preshuffle laws are additive or noncommutative");
    return identity_additive();
}

PreShuffleElement PreShuffleElement::identity_additive()
{
    return additive(NCPolynomial::one(1));
}

std::string PreShuffleElement::str() const
{
    return holds_polynomial() ? poly().str() : series().str();
}

bool PreShuffleElement::operator==(const PreShuffleElement& other) const
{
    if (!(law_ == other.law_) || arity_ != other.arity_) return false;
    if (holds_polynomial() != other.holds_polynomial()) return false;
    if (holds_polynomial()) return poly() == other.poly();
    return series() == other.series();
}

PreShuffleElement bullet_compose(const PreShuffleElement& P, unsigned i,
                                 const PreShuffleElement& Q)
{
    if (!(P.law() == Q.law()))
        throw std::invalid_argument("bullet: law mismatch");
    unsigned n = P.arity(), m = Q.arity();
    if (i < 1 || i > n) throw std::invalid_argument("bullet: index out of range");
    unsigned target = n + m - 1;

    if (P.holds_polynomial()) {
        std::vector<NCPolynomial> args;
        args.reserve(n);
        for (unsigned j = 1; j < i; ++j) args.push_back(NCPolynomial::variable(target, j));
        args.push_back(P.law().nfold_ncpoly(m).embedded(target, i - 1));
        for (unsigned j = i + 1; j <= n; ++j)
            args.push_back(NCPolynomial::variable(target, j + m - 1));
        NCPolynomial value =
            P.poly().substitute(args, target) * Q.poly().embedded(target, i - 1);
        return PreShuffleElement::additive(std::move(value));
    }

    unsigned trunc = P.law().truncation_degree();
    std::vector<NCSeries> args;
    args.reserve(n);
    for (unsigned j = 1; j < i; ++j) args.push_back(NCSeries::variable(target, trunc, j));
    args.push_back(P.law().nfold_nc(m).embedded(target, i - 1));
    for (unsigned j = i + 1; j <= n; ++j)
        args.push_back(NCSeries::variable(target, trunc, j + m - 1));
    NCSeries value = P.series().substitute(args, target) *
                     Q.series().embedded(target, i - 1);
    return PreShuffleElement::with_law(P.law(), std::move(value));
}

bool check_axiom_I_preshuffle(const PreShuffleElement& a, const PreShuffleElement& b,
                              const PreShuffleElement& c, unsigned i, unsigned j)
{
    if (i < 1 || i > a.arity() || j < 1 || j > b.arity())
        throw std::invalid_argument("axiom I: invalid indices");
    PreShuffleElement lhs = bullet_compose(bullet_compose(a, i, b), i - 1 + j, c);
    PreShuffleElement rhs = bullet_compose(a, i, bullet_compose(b, j, c));
    return lhs == rhs;
}

bool preshuffle_axiom_I_exhaustive(const FormalGroupLaw& law, unsigned max_arity,
                                   unsigned max_len)
{
    auto element = [&](unsigned arity, const Word& w) {
        if (law.kind() == LawKind::NCSeries)
            return PreShuffleElement::with_law(
                law, NCSeries(NCPolynomial::word_monomial(arity, w, Rational(1)),
                              law.truncation_degree()));
        return PreShuffleElement::additive(
            NCPolynomial::word_monomial(arity, w, Rational(1)));
    };
    for (unsigned na = 1; na <= max_arity; ++na)
        for (unsigned nb = 1; nb <= max_arity; ++nb)
            for (unsigned nc = 1; nc <= max_arity; ++nc)
                for (const auto& wa : words_up_to(na, max_len))
                    for (const auto& wb : words_up_to(nb, max_len))
                        for (const auto& wc : words_up_to(nc, max_len)) {
                            auto a = element(na, wa);
                            auto b = element(nb, wb);
                            auto c = element(nc, wc);
                            for (unsigned i = 1; i <= na; ++i)
                                for (unsigned j = 1; j <= nb; ++j)
                                    if (!check_axiom_I_preshuffle(a, b, c, i, j))
                                        return false;
                        }
    return true;
}

bool check_defining_relations(unsigned max_arity, unsigned max_len)
{
    auto mu = PreShuffleElement::additive(NCPolynomial::one(2));
    auto der = PreShuffleElement::additive(NCPolynomial::variable(1, 1));

    // mu .1 mu == mu .2 mu
    if (!(bullet_compose(mu, 1, mu) == bullet_compose(mu, 2, mu))) return false;
    // D .1 mu == mu .1 D + mu .2 D
    {
        PreShuffleElement lhs = bullet_compose(der, 1, mu);
        NCPolynomial rhs =
            bullet_compose(mu, 1, der).poly() + bullet_compose(mu, 2, der).poly();
        if (!(lhs.poly() == rhs)) return false;
    }

    // (alpha .i D) .j mu == (alpha .j mu) .i D        for i < j
    // (alpha .i mu) .{j+1} D == (alpha .j D) .i mu    for i < j
    for (unsigned n = 2; n <= max_arity; ++n)
        for (const auto& w : words_up_to(n, max_len)) {
            auto alpha = PreShuffleElement::additive(
                NCPolynomial::word_monomial(n, w, Rational(1)));
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = i + 1; j <= n; ++j) {
                    auto lhs1 = bullet_compose(bullet_compose(alpha, i, der), j, mu);
                    auto rhs1 = bullet_compose(bullet_compose(alpha, j, mu), i, der);
                    if (!(lhs1 == rhs1)) return false;
                    auto lhs2 = bullet_compose(bullet_compose(alpha, i, mu), j + 1, der);
                    auto rhs2 = bullet_compose(bullet_compose(alpha, j, der), i, mu);
                    if (!(lhs2 == rhs2)) return false;
                }
        }
    return true;
}

PreShuffleElement leveled_monomial(const Word& w, unsigned arity)
{
    for (auto l : w.letters)
        if (l < 1 || l > arity)
            throw std::invalid_argument("leveled_monomial: letter out of range");
    // mu_n = 1_n, with the convention mu_1 = id = 1_1.
    PreShuffleElement acc = PreShuffleElement::additive(NCPolynomial::one(arity));
    auto der = PreShuffleElement::additive(NCPolynomial::variable(1, 1));
    // Letters left to right are the composition order: the word x_{j_k}..x_{j_1}
    // is ((mu .{j_k} D) .{j_{k-1}} D) ... .{j_1} D.
    for (auto l : w.letters) acc = bullet_compose(acc, l, der);
    return acc;
}

bool leveled_monomial_check(const Word& w, unsigned arity)
{
    return leveled_monomial(w, arity) ==
           PreShuffleElement::additive(NCPolynomial::word_monomial(arity, w, Rational(1)));
}

AxiomIIWitness axiom_II_failure_witness()
{
    auto mu = PreShuffleElement::additive(NCPolynomial::one(2));
    auto der = PreShuffleElement::additive(NCPolynomial::variable(1, 1));
    PreShuffleElement lhs = bullet_compose(bullet_compose(mu, 1, der), 2, der);
    PreShuffleElement rhs = bullet_compose(bullet_compose(mu, 2, der), 1, der);
    return AxiomIIWitness{lhs, rhs,
                          "(mu .1 D) .2 D = " + lhs.str() + "  vs  (mu .2 D) .1 D = " +
                              rhs.str(),
                          !(lhs == rhs)};
}

bool abelianization_consistency_check(std::uint64_t seed, unsigned trials)
{
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        unsigned n = 1 + static_cast<unsigned>(rand_below(rng, 3));
        unsigned m = 1 + static_cast<unsigned>(rand_below(rng, 3));
        unsigned i = 1 + static_cast<unsigned>(rand_below(rng, n));
        NCPolynomial p = random_nc_polynomial(rng, n, 2, 3);
        NCPolynomial q = random_nc_polynomial(rng, m, 2, 3);
        PreShuffleElement composed = bullet_compose(PreShuffleElement::additive(p), i,
                                                    PreShuffleElement::additive(q));
        OperadElement abelian = partial_compose(
            OperadElement::asder(Rational(0), p.abelianize()), i,
            OperadElement::asder(Rational(0), q.abelianize()));
        if (!(composed.poly().abelianize() == abelian.poly())) return false;
    }
    return true;
}

} // namespace opcal
