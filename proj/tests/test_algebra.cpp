#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opcal/ncpolynomial.hpp"
#include "opcal/poly_gcd.hpp"
#include "opcal/random_gen.hpp"
#include "opcal/rational_function.hpp"
#include "test_support.hpp"

using namespace opcal;
using opcal::test::agree_on_grid;
using opcal::test::poly_from_terms;

namespace {
Polynomial var(unsigned arity, unsigned i) { return Polynomial::variable(arity, i); }
}

TEST_CASE("polynomial addition and multiplication")
{
    CHECK((var(1, 1) + (-var(1, 1))).is_zero());

    Polynomial prod = (var(2, 1) + var(2, 2)) * var(2, 1);
    CHECK(prod == poly_from_terms(2, {{{2, 0}, 1}, {{1, 1}, 1}}));
    CHECK(prod.str() == "x1^2 + x1*x2");

    Polynomial square = (var(2, 1) + var(2, 2)) * (var(2, 1) + var(2, 2));
    Polynomial expected = poly_from_terms(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
    CHECK(square == expected);
    CHECK(agree_on_grid(square, expected, 5));
}

TEST_CASE("polynomial substitution")
{
    std::vector<Polynomial> sum{var(2, 1) + var(2, 2)};
    Polynomial s = var(1, 1).pow(2).substitute(sum, 2);
    CHECK(s == poly_from_terms(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
    CHECK(agree_on_grid(s, poly_from_terms(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}), 5));

    std::vector<Polynomial> any{var(3, 3), var(3, 1) + var(3, 2)};
    CHECK(Polynomial::one(2).substitute(any, 3) == Polynomial::one(3));

    std::vector<Polynomial> assign{var(3, 1), var(3, 2) + var(3, 3)};
    Polynomial t = (var(2, 1) * var(2, 2)).substitute(assign, 3);
    CHECK(t == poly_from_terms(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}}));

    CHECK_THROWS_AS(Polynomial::one(2).substitute(std::vector<Polynomial>{var(1, 1)}, 1),
                    std::invalid_argument);
}

TEST_CASE("grlex order and printing")
{
    Polynomial p = var(2, 2).pow(2) + var(2, 1) * var(2, 2);
    CHECK(p.leading_monomial() == Monomial({1, 1}));
    CHECK(p.str() == "x1*x2 + x2^2");
    CHECK(Polynomial(2).str() == "0");
    Polynomial q = Polynomial::constant(2, Rational(-1, 2)) * var(2, 1) -
                   Polynomial::one(2);
    CHECK(q.str() == "-1/2*x1 - 1");
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 30; ++t) {
        unsigned n = 1 + static_cast<unsigned>(rand_below(rng, 3));
        Polynomial a = random_polynomial(rng, n, 3, 4);
        Polynomial b = random_polynomial(rng, n, 3, 4);
        Polynomial c = random_polynomial(rng, n, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("substitution is a ring morphism")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        unsigned n = 1 + static_cast<unsigned>(rand_below(rng, 2));
        unsigned m = 1 + static_cast<unsigned>(rand_below(rng, 3));
        Polynomial p = random_polynomial(rng, n, 2, 3);
        Polynomial q = random_polynomial(rng, n, 2, 3);
        std::vector<Polynomial> assign;
        for (unsigned v = 0; v < n; ++v) assign.push_back(random_polynomial(rng, m, 2, 2));
        CHECK((p * q).substitute(assign, m) ==
              p.substitute(assign, m) * q.substitute(assign, m));
        CHECK((p + q).substitute(assign, m) ==
              p.substitute(assign, m) + q.substitute(assign, m));
    }
}

TEST_CASE("rational function arithmetic")
{
    RationalFunction inv1(Polynomial::one(2), var(2, 1));
    RationalFunction inv2(Polynomial::one(2), var(2, 2));
    RationalFunction sum = inv1 + inv2;
    CHECK(sum == RationalFunction(var(2, 1) + var(2, 2), var(2, 1) * var(2, 2)));

    RationalFunction f(var(2, 1) + var(2, 2), var(2, 2).pow(3));
    CHECK(f * RationalFunction::one(2) == f);

    RationalFunction lhs(var(2, 1).pow(2) - var(2, 2).pow(2), var(2, 1) - var(2, 2));
    CHECK(lhs == RationalFunction(var(2, 1) + var(2, 2)));

    CHECK_THROWS_AS(f / RationalFunction::zero(2), std::domain_error);
    CHECK_THROWS_AS(RationalFunction(Polynomial::one(2), Polynomial(2)),
                    std::domain_error);
}

TEST_CASE("rational function equality is consistent with arithmetic")
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
        unsigned n = 1 + static_cast<unsigned>(rand_below(rng, 2));
        RationalFunction a = random_rational_function(rng, n);
        Polynomial scale = random_nonzero_polynomial(rng, n, 1, 2);
        RationalFunction b(a.num() * scale, a.den() * scale); // equal by construction
        RationalFunction e = random_rational_function(rng, n);
        CHECK(a == b);
        CHECK(a + e == b + e);
        CHECK(a * e == b * e);
    }
}

TEST_CASE("normalization divides out the gcd")
{
    RationalFunction f((var(2, 1).pow(2) - var(2, 2).pow(2)) * Rational(3),
                       (var(2, 1) - var(2, 2)) * Rational(6));
    RationalFunction n = f.normalize();
    CHECK(n.den() == Polynomial::one(2));
    CHECK(n.num() == (var(2, 1) + var(2, 2)) * Rational(1, 2));
    CHECK(f.is_polynomial());
    CHECK(f.to_polynomial() == (var(2, 1) + var(2, 2)) * Rational(1, 2));
}

TEST_CASE("noncommutative product")
{
    NCPolynomial x1 = NCPolynomial::variable(2, 1);
    NCPolynomial x2 = NCPolynomial::variable(2, 2);
    CHECK(x1 * x2 == NCPolynomial::word_monomial(2, Word({1, 2}), Rational(1)));
    CHECK(x2 * x1 == NCPolynomial::word_monomial(2, Word({2, 1}), Rational(1)));
    CHECK(!(x1 * x2 == x2 * x1));
    CHECK((x1 + x2) * x1 == NCPolynomial::word_monomial(2, Word({1, 1}), Rational(1)) +
                                NCPolynomial::word_monomial(2, Word({2, 1}), Rational(1)));
    NCPolynomial w = NCPolynomial::word_monomial(2, Word({2, 1, 2}), Rational(1));
    CHECK(NCPolynomial::one(2) * w == w);

    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        NCPolynomial a = random_nc_polynomial(rng, 2, 2, 3);
        NCPolynomial b = random_nc_polynomial(rng, 2, 2, 3);
        NCPolynomial c = random_nc_polynomial(rng, 2, 2, 3);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("noncommutative substitution")
{
    NCPolynomial w11 = NCPolynomial::word_monomial(1, Word({1, 1}), Rational(1));
    std::vector<NCPolynomial> sum{NCPolynomial::variable(2, 1) +
                                  NCPolynomial::variable(2, 2)};
    NCPolynomial s = w11.substitute(sum, 2);
    NCPolynomial expected(2);
    for (auto w : {Word({1, 1}), Word({1, 2}), Word({2, 1}), Word({2, 2})})
        expected.add_term(w, Rational(1));
    CHECK(s == expected);

    CHECK(NCPolynomial::one(1).substitute(sum, 2) == NCPolynomial::one(2));

    std::vector<NCPolynomial> assign{NCPolynomial::variable(3, 1),
                                     NCPolynomial::variable(3, 2) +
                                         NCPolynomial::variable(3, 3)};
    CHECK(NCPolynomial::variable(2, 2).substitute(assign, 3) ==
          NCPolynomial::variable(3, 2) + NCPolynomial::variable(3, 3));

    // letterwise substitution is multiplicative
    std::mt19937_64 rng(5);
    for (int t = 0; t < 15; ++t) {
        NCPolynomial a = random_nc_polynomial(rng, 2, 2, 2);
        NCPolynomial b = random_nc_polynomial(rng, 2, 2, 2);
        std::vector<NCPolynomial> f{random_nc_polynomial(rng, 2, 1, 2),
                                    random_nc_polynomial(rng, 2, 1, 2)};
        CHECK((a * b).substitute(f, 2) == a.substitute(f, 2) * b.substitute(f, 2));
    }
}

TEST_CASE("series exp and log")
{
    NCSeries zero(2, 4);
    CHECK(series_exp(zero) == NCSeries::one(2, 4));
    NCSeries x1 = NCSeries::variable(1, 6, 1);
    CHECK(series_log(series_exp(x1)) == x1);

    NCSeries ex = series_exp(NCSeries::variable(2, 2, 1));
    NCSeries ey = series_exp(NCSeries::variable(2, 2, 2));
    NCPolynomial expected = NCPolynomial::one(2);
    expected.add_term(Word({1}), Rational(1));
    expected.add_term(Word({2}), Rational(1));
    expected.add_term(Word({1, 1}), Rational(1, 2));
    expected.add_term(Word({1, 2}), Rational(1));
    expected.add_term(Word({2, 2}), Rational(1, 2));
    CHECK(ex * ey == NCSeries(expected, 2));

    CHECK_THROWS_AS(series_exp(NCSeries::one(1, 3)), std::domain_error);
    CHECK_THROWS_AS(series_log(NCSeries(1, 3)), std::domain_error);

    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        NCPolynomial p = random_nc_polynomial(rng, 2, 3, 4);
        p.add_term(Word(), -p.constant_term()); // zero constant term
        NCSeries s(p, 4);
        CHECK(series_log(series_exp(s)) == s);
    }
}

TEST_CASE("no zero coefficients are ever stored")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
        unsigned n = 1 + static_cast<unsigned>(rand_below(rng, 3));
        Polynomial a = random_polynomial(rng, n, 2, 4);
        Polynomial b = random_polynomial(rng, n, 2, 4);
        CHECK((a + b).is_canonical());
        CHECK((a - a).is_canonical());
        CHECK((a * b).is_canonical());
        NCPolynomial c = random_nc_polynomial(rng, n, 2, 4);
        NCPolynomial d = random_nc_polynomial(rng, n, 2, 4);
        CHECK((c * d).is_canonical());
        CHECK((c - c).is_canonical());
    }
}

TEST_CASE("gcd utilities")
{
    Polynomial a = (var(2, 1) + var(2, 2)).pow(2) * var(2, 1);
    Polynomial b = (var(2, 1) + var(2, 2)) * var(2, 2);
    CHECK(poly_gcd(a, b) == var(2, 1) + var(2, 2));
    CHECK(poly_divexact(a, var(2, 1)) == (var(2, 1) + var(2, 2)).pow(2));
    CHECK_THROWS_AS(poly_divexact(var(2, 1), var(2, 2)), std::domain_error);
    CHECK(poly_gcd(Polynomial(2), b) == poly_primitive(b));
}
