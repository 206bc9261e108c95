#include "opcal/operad.hpp"

#include <sstream>
#include <stdexcept>

#include "opcal/random_gen.hpp"

namespace opcal {

Realization::Realization(Kind kind, Rational lambda, FormalGroupLaw law)
    : kind_(kind), lambda_(std::move(lambda)), law_(std::move(law))
{
}

Realization Realization::asder(const Rational& lambda)
{
    return Realization(Kind::AsDer, lambda, FormalGroupLaw::theta(lambda));
}

Realization Realization::ratfct(FormalGroupLaw law)
{
    if (law.kind() == LawKind::NCSeries)
        throw std::invalid_argument(
            "noncommutative laws do not define an operad; see the preshuffle module");
    return Realization(Kind::RatFct, Rational(0), std::move(law));
}

std::string Realization::name() const
{
    if (kind_ == Kind::AsDer) {
        if (lambda_ == 0) return "AsDer";
        return "AsDer(lambda=" + lambda_.str() + ")";
    }
    return "RatFct[" + law_.name() + "]";
}

bool Realization::operator==(const Realization& other) const
{
    return kind_ == other.kind_ && lambda_ == other.lambda_ && law_ == other.law_;
}

OperadElement::OperadElement(Realization r, unsigned arity,
                             std::variant<Polynomial, RationalFunction> value)
    : realization_(std::move(r)), arity_(arity), value_(std::move(value))
{
}

OperadElement OperadElement::asder(const Rational& lambda, Polynomial value)
{
    unsigned n = value.arity();
    return OperadElement(Realization::asder(lambda), n, std::move(value));
}

OperadElement OperadElement::ratfct(FormalGroupLaw law, RationalFunction value)
{
    Realization r = Realization::ratfct(std::move(law));
    if (!r.polynomial_closed() && !value.is_polynomial())
        throw std::invalid_argument(
            "a series-valued law only composes polynomial elements");
    unsigned n = value.arity();
    return OperadElement(std::move(r), n, std::move(value));
}

OperadElement OperadElement::make(const Realization& r, Polynomial value)
{
    if (r.kind() != Realization::Kind::AsDer)
        return ratfct(r.law(), RationalFunction(std::move(value)));
    return asder(r.lambda(), std::move(value));
}

OperadElement OperadElement::make(const Realization& r, RationalFunction value)
{
    if (r.kind() == Realization::Kind::AsDer)
        return asder(r.lambda(), value.to_polynomial());
    return ratfct(r.law(), std::move(value));
}

OperadElement OperadElement::identity(const Realization& r)
{
    if (r.kind() == Realization::Kind::AsDer)
        return asder(r.lambda(), Polynomial::one(1));
    return ratfct(r.law(), RationalFunction::one(1));
}

std::string OperadElement::str() const
{
    return holds_polynomial() ? poly().str() : ratfn().str();
}

bool OperadElement::operator==(const OperadElement& other) const
{
    if (!(realization_ == other.realization_) || arity_ != other.arity_) return false;
    if (holds_polynomial() != other.holds_polynomial()) return false;
    if (holds_polynomial()) return poly() == other.poly();
    return ratfn() == other.ratfn();
}

namespace {

// Variable assignments realizing P o_i Q on the substitution side:
// x_j for j < i, F(x_i..x_{i+m-1}) at slot i, x_{j+m-1} beyond.
std::vector<Polynomial> compose_assignments(const FormalGroupLaw& law, unsigned n,
                                            unsigned i, unsigned m)
{
    unsigned target = n + m - 1;
    std::vector<Polynomial> args;
    args.reserve(n);
    for (unsigned j = 1; j < i; ++j) args.push_back(Polynomial::variable(target, j));
    args.push_back(law.nfold(m).embedded(target, i - 1));
    for (unsigned j = i + 1; j <= n; ++j)
        args.push_back(Polynomial::variable(target, j + m - 1));
    return args;
}

} // namespace

OperadElement partial_compose(const OperadElement& P, unsigned i, const OperadElement& Q)
{
    if (!(P.realization() == Q.realization()))
        throw std::invalid_argument("compose: realization mismatch");
    unsigned n = P.arity(), m = Q.arity();
    if (i < 1 || i > n) throw std::invalid_argument("compose: index out of range");
    const Realization& r = P.realization();
    unsigned target = n + m - 1;
    auto args = compose_assignments(r.law(), n, i, m);

    if (r.kind() == Realization::Kind::AsDer) {
        Polynomial value =
            P.poly().substitute(args, target) * Q.poly().embedded(target, i - 1);
        return OperadElement::asder(r.lambda(), std::move(value));
    }
    if (r.polynomial_closed()) {
        RationalFunction value =
            P.ratfn().substitute(args, target) * Q.ratfn().embedded(target, i - 1);
        return OperadElement::ratfct(r.law(), std::move(value));
    }
    // Series-valued law: polynomial elements only, result truncated.
    unsigned trunc = r.law().truncation_degree();
    Polynomial p = P.ratfn().to_polynomial();
    Polynomial q = Q.ratfn().to_polynomial();
    Polynomial value =
        (p.substitute_truncated(args, target, trunc) * q.embedded(target, i - 1))
            .truncated(trunc);
    return OperadElement::ratfct(r.law(), RationalFunction(std::move(value)));
}

OperadElement gamma(const OperadElement& P, std::span<const OperadElement> Qs)
{
    if (Qs.size() != P.arity())
        throw std::invalid_argument("gamma: need arity(P) inner operations");
    const Realization& r = P.realization();
    unsigned n = 0;
    for (const auto& q : Qs) {
        if (!(q.realization() == r))
            throw std::invalid_argument("gamma: realization mismatch");
        n += q.arity();
    }

    std::vector<Polynomial> args;
    std::vector<unsigned> offsets;
    args.reserve(Qs.size());
    unsigned offset = 0;
    for (const auto& q : Qs) {
        offsets.push_back(offset);
        args.push_back(r.law().nfold(q.arity()).embedded(n, offset));
        offset += q.arity();
    }

    if (r.kind() == Realization::Kind::AsDer) {
        Polynomial value = P.poly().substitute(args, n);
        for (std::size_t j = 0; j < Qs.size(); ++j)
            value *= Qs[j].poly().embedded(n, offsets[j]);
        return OperadElement::asder(r.lambda(), std::move(value));
    }
    if (r.polynomial_closed()) {
        RationalFunction value = P.ratfn().substitute(args, n);
        for (std::size_t j = 0; j < Qs.size(); ++j)
            value *= Qs[j].ratfn().embedded(n, offsets[j]);
        return OperadElement::ratfct(r.law(), std::move(value));
    }
    unsigned trunc = r.law().truncation_degree();
    Polynomial value = P.ratfn().to_polynomial().substitute_truncated(args, n, trunc);
    for (std::size_t j = 0; j < Qs.size(); ++j)
        value = (value * Qs[j].ratfn().to_polynomial().embedded(n, offsets[j]))
                    .truncated(trunc);
    return OperadElement::ratfct(r.law(), RationalFunction(std::move(value)));
}

bool check_axiom_I(const OperadElement& a, const OperadElement& b,
                   const OperadElement& c, unsigned i, unsigned j)
{
    if (i < 1 || i > a.arity() || j < 1 || j > b.arity())
        throw std::invalid_argument("axiom I: invalid indices");
    OperadElement lhs = partial_compose(partial_compose(a, i, b), i - 1 + j, c);
    OperadElement rhs = partial_compose(a, i, partial_compose(b, j, c));
    return lhs == rhs;
}

bool check_axiom_II(const OperadElement& a, const OperadElement& b,
                    const OperadElement& c, unsigned i, unsigned k)
{
    if (i < 1 || k <= i || k > a.arity())
        throw std::invalid_argument("axiom II: need 1 <= i < k <= arity");
    unsigned m = b.arity();
    OperadElement lhs = partial_compose(partial_compose(a, i, b), k + m - 1, c);
    OperadElement rhs = partial_compose(partial_compose(a, k, c), i, b);
    return lhs == rhs;
}

std::vector<std::pair<std::string, Polynomial>> dialgebra_table(const Rational& lambda)
{
    auto x1 = OperadElement::asder(lambda, Polynomial::variable(2, 1));
    auto x2 = OperadElement::asder(lambda, Polynomial::variable(2, 2));
    std::vector<std::pair<std::string, Polynomial>> table;
    const OperadElement* elems[2] = {&x1, &x2};
    for (unsigned i = 1; i <= 2; ++i)
        for (unsigned p = 0; p < 2; ++p)
            for (unsigned q = 0; q < 2; ++q) {
                std::ostringstream label;
                label << "x" << (p + 1) << " o" << i << " x" << (q + 1);
                table.emplace_back(label.str(),
                                   partial_compose(*elems[p], i, *elems[q]).poly());
            }
    return table;
}

std::pair<bool, bool> dialgebra_relations(const Rational& lambda)
{
    auto x1 = OperadElement::asder(lambda, Polynomial::variable(2, 1));
    auto x2 = OperadElement::asder(lambda, Polynomial::variable(2, 2));
    auto cmp = [](const OperadElement& a, const OperadElement& b) {
        return a.poly() == b.poly();
    };
    bool first = cmp(partial_compose(x2, 1, x1), partial_compose(x1, 2, x2));
    Polynomial lhs =
        partial_compose(x1, 1, x2).poly() + partial_compose(x2, 1, x2).poly();
    Polynomial rhs =
        partial_compose(x1, 2, x1).poly() + partial_compose(x2, 2, x1).poly();
    return {first, lhs == rhs};
}

bool dialgebra_relations_check()
{
    auto [a, b] = dialgebra_relations(Rational(0));
    return a && b;
}

Polynomial evaluate_asder(const OperadElement& op, std::span<const Polynomial> args)
{
    if (op.realization().kind() != Realization::Kind::AsDer ||
        op.realization().lambda() != 0)
        throw std::invalid_argument("evaluation is defined for AsDer(0) operations");
    if (args.size() != op.arity())
        throw std::invalid_argument("evaluate: need arity(op) arguments");
    for (const auto& a : args)
        if (a.arity() != 1)
            throw std::invalid_argument("evaluate: arguments live in K[x]");

    Polynomial result(1);
    for (const auto& [m, c] : op.poly().terms()) {
        Polynomial term = Polynomial::constant(1, c);
        for (unsigned v = 0; v < op.arity(); ++v) {
            Polynomial d = args[v];
            for (unsigned k = 0; k < m.exps[v]; ++k) d = d.derivative(1);
            term *= d;
        }
        result += term;
    }
    return result;
}

bool shift_formula_check(const Polynomial& p, unsigned trunc)
{
    if (p.arity() != 1) throw std::invalid_argument("shift formula: univariate input");
    Polynomial lhs(2);
    Polynomial d = p;
    for (unsigned n = 0; n <= trunc; ++n) {
        if (n > 0) d = d.derivative(1);
        Polynomial y_pow = Polynomial::variable(2, 2).pow(n);
        lhs += y_pow * d.embedded(2, 0) * Rational(Integer(1), factorial(n));
    }
    std::vector<Polynomial> shift{Polynomial::variable(2, 1) + Polynomial::variable(2, 2)};
    Polynomial rhs = p.substitute(shift, 2);
    return lhs == rhs;
}

OperadElement random_element(const Realization& r, std::mt19937_64& rng, unsigned arity,
                             unsigned max_degree, unsigned max_terms)
{
    if (r.kind() == Realization::Kind::AsDer)
        return OperadElement::asder(r.lambda(),
                                    random_polynomial(rng, arity, max_degree, max_terms));
    return OperadElement::ratfct(r.law(),
                                 random_rational_function(rng, arity, max_degree, max_terms));
}

bool operad_axioms_random_check(const Realization& r, std::uint64_t seed,
                                unsigned trials, unsigned max_arity,
                                unsigned max_degree)
{
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        unsigned l = 1 + static_cast<unsigned>(rand_below(rng, max_arity));
        unsigned m = 1 + static_cast<unsigned>(rand_below(rng, max_arity));
        unsigned n = 1 + static_cast<unsigned>(rand_below(rng, max_arity));
        OperadElement a = random_element(r, rng, l, max_degree, 3);
        OperadElement b = random_element(r, rng, m, max_degree, 3);
        OperadElement c = random_element(r, rng, n, max_degree, 3);
        for (unsigned i = 1; i <= l; ++i)
            for (unsigned j = 1; j <= m; ++j)
                if (!check_axiom_I(a, b, c, i, j)) return false;
        for (unsigned i = 1; i <= l; ++i)
            for (unsigned k = i + 1; k <= l; ++k)
                if (!check_axiom_II(a, b, c, i, k)) return false;
    }
    return true;
}

bool operad_unit_check(const Realization& r, std::uint64_t seed, unsigned trials)
{
    std::mt19937_64 rng(seed);
    OperadElement id = OperadElement::identity(r);
    for (unsigned t = 0; t < trials; ++t) {
        unsigned n = 1 + static_cast<unsigned>(rand_below(rng, 3));
        OperadElement p = random_element(r, rng, n, 2, 3);
        if (!(partial_compose(id, 1, p) == p)) return false;
        for (unsigned i = 1; i <= n; ++i)
            if (!(partial_compose(p, i, id) == p)) return false;
    }
    return true;
}

bool gamma_matches_nested_check(const Realization& r, std::uint64_t seed,
                                unsigned trials)
{
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        unsigned k = 1 + static_cast<unsigned>(rand_below(rng, 3));
        OperadElement p = random_element(r, rng, k, 2, 3);
        std::vector<OperadElement> qs;
        for (unsigned j = 0; j < k; ++j) {
            unsigned m = 1 + static_cast<unsigned>(rand_below(rng, 2));
            qs.push_back(random_element(r, rng, m, 2, 2));
        }
        OperadElement direct = gamma(p, qs);
        OperadElement nested = p;
        for (unsigned j = k; j >= 1; --j)
            nested = partial_compose(nested, j, qs[j - 1]);
        if (!(direct == nested)) return false;
    }
    return true;
}

bool evaluation_compatibility_check(std::uint64_t seed, unsigned trials)
{
    std::mt19937_64 rng(seed);
    Realization r = Realization::asder(Rational(0));
    for (unsigned t = 0; t < trials; ++t) {
        unsigned k = 1 + static_cast<unsigned>(rand_below(rng, 3));
        OperadElement p = random_element(r, rng, k, 2, 2);
        std::vector<OperadElement> qs;
        std::vector<Polynomial> args;
        for (unsigned j = 0; j < k; ++j) {
            unsigned m = 1 + static_cast<unsigned>(rand_below(rng, 2));
            qs.push_back(random_element(r, rng, m, 2, 2));
            for (unsigned s = 0; s < m; ++s)
                args.push_back(random_polynomial(rng, 1, 3, 2));
        }
        Polynomial lhs = evaluate_asder(gamma(p, qs), args);
        std::vector<Polynomial> block_values;
        std::size_t offset = 0;
        for (const auto& q : qs) {
            std::span<const Polynomial> block(args.data() + offset, q.arity());
            block_values.push_back(evaluate_asder(q, block));
            offset += q.arity();
        }
        Polynomial rhs = evaluate_asder(p, block_values);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace opcal
