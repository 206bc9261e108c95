#include "opcal/fgl.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace opcal {

FormalGroupLaw::FormalGroupLaw(LawKind kind, Polynomial f, unsigned trunc,
                               std::string name)
    : kind_(kind), poly_(std::move(f)), trunc_(trunc), name_(std::move(name))
{
}

FormalGroupLaw::FormalGroupLaw(NCSeries f, std::string name)
    : kind_(LawKind::NCSeries), poly_(2), nc_(std::move(f)),
      trunc_(nc_->truncation_degree()), name_(std::move(name))
{
}

FormalGroupLaw FormalGroupLaw::additive()
{
    Polynomial f = Polynomial::variable(2, 1) + Polynomial::variable(2, 2);
    return FormalGroupLaw(LawKind::Polynomial, std::move(f), 0, "additive");
}

FormalGroupLaw FormalGroupLaw::theta(const Rational& lambda)
{
    Polynomial x = Polynomial::variable(2, 1);
    Polynomial y = Polynomial::variable(2, 2);
    Polynomial f = x + y + (x * y) * lambda;
    std::ostringstream name;
    name << "theta(" << lambda.str() << ")";
    return FormalGroupLaw(LawKind::Polynomial, std::move(f), 0, name.str());
}

namespace {

// sqrt(1 + u) as a truncated series, u with zero constant term.
Polynomial sqrt_one_plus(const Polynomial& u, unsigned trunc)
{
    Polynomial acc = Polynomial::one(u.arity());
    Polynomial pw = Polynomial::one(u.arity());
    for (unsigned k = 1; k <= trunc; ++k) {
        pw = (pw * u).truncated(trunc);
        if (pw.is_zero()) break;
        acc += pw * binomial(Rational(1, 2), k);
    }
    return acc;
}

} // namespace

FormalGroupLaw FormalGroupLaw::jacobi(const Rational& delta, const Rational& epsilon,
                                      unsigned trunc)
{
    if (trunc < 1) throw std::invalid_argument("jacobi: truncation degree must be >= 1");
    Polynomial x = Polynomial::variable(2, 1);
    Polynomial y = Polynomial::variable(2, 2);
    auto q_minus_one = [&](const Polynomial& t) {
        return t.pow(2) * (Rational(-2) * delta) + t.pow(4) * epsilon;
    };
    Polynomial sqrt_qx = sqrt_one_plus(q_minus_one(x), trunc);
    Polynomial sqrt_qy = sqrt_one_plus(q_minus_one(y), trunc);
    Polynomial numer = (x * sqrt_qy + y * sqrt_qx).truncated(trunc);
    // 1/(1 - eps*x^2*y^2) as a geometric series.
    Polynomial denom_inv = Polynomial::one(2);
    Polynomial v = (x.pow(2) * y.pow(2)) * epsilon;
    Polynomial pw = Polynomial::one(2);
    for (unsigned k = 1; 4 * k <= trunc; ++k) {
        pw = (pw * v).truncated(trunc);
        denom_inv += pw;
    }
    Polynomial f = (numer * denom_inv).truncated(trunc);
    std::ostringstream name;
    name << "jacobi(" << delta.str() << "," << epsilon.str() << ";" << trunc << ")";
    return FormalGroupLaw(LawKind::Series, std::move(f), trunc, name.str());
}

FormalGroupLaw FormalGroupLaw::bch(unsigned trunc)
{
    if (trunc < 1) throw std::invalid_argument("bch: truncation degree must be >= 1");
    NCSeries x = NCSeries::variable(2, trunc, 1);
    NCSeries y = NCSeries::variable(2, trunc, 2);
    NCSeries f = series_log(series_exp(x) * series_exp(y));
    std::ostringstream name;
    name << "bch(" << trunc << ")";
    return FormalGroupLaw(std::move(f), name.str());
}

const Polynomial& FormalGroupLaw::two_variable() const
{
    if (kind_ == LawKind::NCSeries)
        throw std::logic_error("noncommutative law has no commutative payload");
    return poly_;
}

const NCSeries& FormalGroupLaw::two_variable_nc() const
{
    if (kind_ != LawKind::NCSeries)
        throw std::logic_error("commutative law has no noncommutative payload");
    return *nc_;
}

Polynomial FormalGroupLaw::nfold(unsigned n) const
{
    if (n < 1) throw std::invalid_argument("nfold: n must be >= 1");
    if (kind_ == LawKind::NCSeries)
        throw std::logic_error("nfold of a noncommutative law is noncommutative");
    if (n == 2) return poly_;
    Polynomial acc = Polynomial::variable(1, 1);
    for (unsigned m = 2; m <= n; ++m) {
        std::vector<Polynomial> args{acc.embedded(m, 0), Polynomial::variable(m, m)};
        acc = kind_ == LawKind::Polynomial
                  ? poly_.substitute(args, m)
                  : poly_.substitute_truncated(args, m, trunc_);
    }
    return acc;
}

NCSeries FormalGroupLaw::nfold_nc(unsigned n) const
{
    if (n < 1) throw std::invalid_argument("nfold: n must be >= 1");
    if (kind_ != LawKind::NCSeries)
        throw std::logic_error("nfold_nc requires a noncommutative law");
    if (n == 2) return *nc_;
    NCSeries acc = NCSeries::variable(1, trunc_, 1);
    for (unsigned m = 2; m <= n; ++m) {
        std::vector<NCSeries> args{acc.embedded(m, 0), NCSeries::variable(m, trunc_, m)};
        acc = nc_->substitute(args, m);
    }
    return acc;
}

NCPolynomial FormalGroupLaw::nfold_ncpoly(unsigned n) const
{
    if (n < 1) throw std::invalid_argument("nfold: n must be >= 1");
    if (!(kind_ == LawKind::Polynomial && poly_ == additive().poly_))
        throw std::logic_error(
            "only the additive law extends to noncommuting variables as a polynomial");
    NCPolynomial acc(n);
    for (unsigned i = 1; i <= n; ++i) acc += NCPolynomial::variable(n, i);
    return acc;
}

Polynomial FormalGroupLaw::associativity_defect() const
{
    const Polynomial x1 = Polynomial::variable(3, 1);
    const Polynomial x3 = Polynomial::variable(3, 3);
    auto apply = [&](const Polynomial& a, const Polynomial& b) {
        std::vector<Polynomial> args{a, b};
        return kind_ == LawKind::Polynomial ? poly_.substitute(args, 3)
                                            : poly_.substitute_truncated(args, 3, trunc_);
    };
    Polynomial f12 = kind_ == LawKind::Polynomial
                         ? poly_.embedded(3, 0)
                         : poly_.embedded(3, 0).truncated(trunc_);
    Polynomial f23 = poly_.embedded(3, 1);
    if (kind_ == LawKind::Series) f23 = f23.truncated(trunc_);
    return apply(f12, x3) - apply(x1, f23);
}

NCSeries FormalGroupLaw::associativity_defect_nc() const
{
    if (kind_ != LawKind::NCSeries)
        throw std::logic_error("associativity_defect_nc requires a noncommutative law");
    NCSeries x1 = NCSeries::variable(3, trunc_, 1);
    NCSeries x3 = NCSeries::variable(3, trunc_, 3);
    auto apply = [&](const NCSeries& a, const NCSeries& b) {
        std::vector<NCSeries> args{a, b};
        return nc_->substitute(args, 3);
    };
    return apply(apply(x1, NCSeries::variable(3, trunc_, 2)), x3) -
           apply(x1, nc_->embedded(3, 1));
}

bool FormalGroupLaw::unit_axioms_hold() const
{
    if (kind_ == LawKind::NCSeries) {
        NCSeries x = NCSeries::variable(1, trunc_, 1);
        NCSeries zero(1, trunc_);
        std::vector<NCSeries> left{x, zero}, right{zero, x};
        return nc_->substitute(left, 1) == x && nc_->substitute(right, 1) == x;
    }
    Polynomial x = Polynomial::variable(1, 1);
    Polynomial zero(1);
    std::vector<Polynomial> left{x, zero}, right{zero, x};
    Polynomial fx0 = poly_.substitute(left, 1);
    Polynomial f0x = poly_.substitute(right, 1);
    if (kind_ == LawKind::Series) {
        fx0 = fx0.truncated(trunc_);
        f0x = f0x.truncated(trunc_);
    }
    return fx0 == x && f0x == x;
}

bool FormalGroupLaw::operator==(const FormalGroupLaw& other) const
{
    if (kind_ != other.kind_ || trunc_ != other.trunc_) return false;
    if (kind_ == LawKind::NCSeries) return *nc_ == *other.nc_;
    return poly_ == other.poly_;
}

Polynomial elementary_symmetric(unsigned k, unsigned n)
{
    if (k < 1 || k > n) throw std::invalid_argument("elementary_symmetric: k out of range");
    Polynomial p(n);
    std::vector<unsigned> idx(k);
    // iterate over k-subsets of {0..n-1}
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Monomial m(n);
        for (auto i : idx) m.exps[i] = 1;
        p.add_term(m, Rational(1));
        int j = static_cast<int>(k) - 1;
        while (j >= 0 && idx[j] == n - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (unsigned t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return p;
}

Polynomial theta_lambda_closed_form(const Rational& lambda, unsigned n)
{
    Polynomial acc(n);
    for (unsigned k = 1; k <= n; ++k)
        acc += elementary_symmetric(k, n) * rational_pow(lambda, k - 1);
    return acc;
}

} // namespace opcal
