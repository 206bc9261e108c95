#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opcal/fgl.hpp"
#include "test_support.hpp"

using namespace opcal;
using opcal::test::poly_from_terms;

namespace {
Polynomial var(unsigned arity, unsigned i) { return Polynomial::variable(arity, i); }

// F(x1,..,xi, F(x_{i+1},..,x_{i+j}), x_{i+j+1},..,xn) as an arity-n value.
Polynomial nested_nfold(const FormalGroupLaw& law, unsigned i, unsigned j, unsigned n)
{
    Polynomial inner = law.nfold(j).embedded(n, i);
    std::vector<Polynomial> args;
    for (unsigned v = 1; v <= i; ++v) args.push_back(var(n, v));
    args.push_back(inner);
    for (unsigned v = i + j + 1; v <= n; ++v) args.push_back(var(n, v));
    Polynomial outer = law.nfold(n - j + 1);
    return law.kind() == LawKind::Polynomial
               ? outer.substitute(args, n)
               : outer.substitute_truncated(args, n, law.truncation_degree());
}
} // namespace

TEST_CASE("additive law")
{
    FormalGroupLaw add = FormalGroupLaw::additive();
    CHECK(add.two_variable() == var(2, 1) + var(2, 2));
    CHECK(add.polynomial_closed());
    CHECK(add.nfold(1) == var(1, 1));
    CHECK(add.nfold(3) == var(3, 1) + var(3, 2) + var(3, 3));
    CHECK(add.nfold(4) == var(4, 1) + var(4, 2) + var(4, 3) + var(4, 4));
    CHECK(add.associativity_defect().is_zero());
    CHECK(add.unit_axioms_hold());
}

TEST_CASE("theta law")
{
    CHECK(FormalGroupLaw::theta(Rational(0)) == FormalGroupLaw::additive());
    FormalGroupLaw mult = FormalGroupLaw::theta(Rational(1));
    CHECK(mult.two_variable() ==
          poly_from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}));
    CHECK(mult.unit_axioms_hold());
    CHECK(mult.associativity_defect().is_zero());
    CHECK(FormalGroupLaw::theta(Rational(2)).associativity_defect().is_zero());

    // 1 + lambda * theta(x1..xn) == prod (1 + lambda*xi)
    for (const Rational& lambda : {Rational(1), Rational(2), Rational(-1, 2)}) {
        FormalGroupLaw law = FormalGroupLaw::theta(lambda);
        for (unsigned n = 1; n <= 5; ++n) {
            Polynomial lhs = Polynomial::one(n) + law.nfold(n) * lambda;
            Polynomial rhs = Polynomial::one(n);
            for (unsigned i = 1; i <= n; ++i)
                rhs *= Polynomial::one(n) + var(n, i) * lambda;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("elementary symmetric polynomials")
{
    CHECK(elementary_symmetric(1, 3) == var(3, 1) + var(3, 2) + var(3, 3));
    CHECK(elementary_symmetric(2, 3) ==
          poly_from_terms(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}}));
    CHECK_THROWS_AS(elementary_symmetric(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(elementary_symmetric(0, 3), std::invalid_argument);

    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-3, 4)})
        for (unsigned n = 1; n <= 5; ++n)
            CHECK(FormalGroupLaw::theta(lambda).nfold(n) ==
                  theta_lambda_closed_form(lambda, n));
}

TEST_CASE("jacobi law")
{
    FormalGroupLaw trivial = FormalGroupLaw::jacobi(Rational(0), Rational(0), 7);
    CHECK(trivial.two_variable() == var(2, 1) + var(2, 2));
    CHECK_FALSE(trivial.polynomial_closed());

    FormalGroupLaw jac = FormalGroupLaw::jacobi(Rational(1), Rational(1), 7);
    CHECK(jac.unit_axioms_hold());
    CHECK(jac.associativity_defect().is_zero());
    CHECK(FormalGroupLaw::jacobi(Rational(2), Rational(-3), 7)
              .associativity_defect()
              .is_zero());

    // the series genuinely has higher terms
    CHECK(jac.two_variable().total_degree() > 2);
}

TEST_CASE("bch law")
{
    FormalGroupLaw bch = FormalGroupLaw::bch(3);
    NCSeries x = NCSeries::variable(2, 3, 1);
    NCSeries y = NCSeries::variable(2, 3, 2);
    auto comm = [](const NCSeries& a, const NCSeries& b) { return a * b - b * a; };
    NCSeries expected = x + y + comm(x, y) * Rational(1, 2) +
                        (comm(comm(x, y), y) + comm(x, comm(x, y))) * Rational(1, 12);
    CHECK(bch.two_variable_nc() == expected);

    // degree <= 2 part
    FormalGroupLaw bch2 = FormalGroupLaw::bch(2);
    NCSeries x2 = NCSeries::variable(2, 2, 1);
    NCSeries y2 = NCSeries::variable(2, 2, 2);
    CHECK(bch2.two_variable_nc() == x2 + y2 + comm(x2, y2) * Rational(1, 2));

    CHECK(bch.unit_axioms_hold());
    CHECK(FormalGroupLaw::bch(4).associativity_defect_nc().is_zero());

    // BCH(x, 0) = x
    NCSeries x1 = NCSeries::variable(1, 3, 1);
    std::vector<NCSeries> args{x1, NCSeries(1, 3)};
    CHECK(bch.two_variable_nc().substitute(args, 1) == x1);
}

TEST_CASE("nfold and generalized associativity")
{
    for (const FormalGroupLaw& law :
         {FormalGroupLaw::additive(), FormalGroupLaw::theta(Rational(1)),
          FormalGroupLaw::theta(Rational(-2, 3)),
          FormalGroupLaw::jacobi(Rational(1), Rational(1), 5)}) {
        CHECK(law.nfold(1) == var(1, 1));
        for (unsigned n = 2; n <= 5; ++n)
            for (unsigned j = 1; j <= n; ++j)
                for (unsigned i = 0; i + j <= n; ++i)
                    CHECK(nested_nfold(law, i, j, n) == law.nfold(n));
    }
    CHECK_THROWS_AS(FormalGroupLaw::additive().nfold(0), std::invalid_argument);
}

TEST_CASE("generalized associativity for the bch law")
{
    FormalGroupLaw law = FormalGroupLaw::bch(4);
    unsigned d = law.truncation_degree();
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned i = 0; i + j <= n; ++i) {
                NCSeries inner = law.nfold_nc(j).embedded(n, i);
                std::vector<NCSeries> args;
                for (unsigned v = 1; v <= i; ++v)
                    args.push_back(NCSeries::variable(n, d, v));
                args.push_back(inner);
                for (unsigned v = i + j + 1; v <= n; ++v)
                    args.push_back(NCSeries::variable(n, d, v));
                CHECK(law.nfold_nc(n - j + 1).substitute(args, n) == law.nfold_nc(n));
            }
}
