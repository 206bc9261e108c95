#include "opcal/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace opcal {

Monomial Monomial::times(const Monomial& other) const
{
    if (exps.size() != other.exps.size())
        throw std::invalid_argument("monomial arity mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += other.exps[i];
    return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // lex with x1 > x2 > ...: the first differing exponent decides.
    for (std::size_t i = 0; i < a.exps.size() && i < b.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return a.exps.size() > b.exps.size();
}

Polynomial::Polynomial(unsigned arity) : arity_(arity)
{
    if (arity == 0) throw std::invalid_argument("polynomial arity must be >= 1");
}

Polynomial Polynomial::constant(unsigned arity, const Rational& c)
{
    Polynomial p(arity);
    if (c != 0) p.terms_.emplace(Monomial(arity), c);
    return p;
}

Polynomial Polynomial::variable(unsigned arity, unsigned index)
{
    if (index < 1 || index > arity)
        throw std::invalid_argument("variable index out of range");
    Monomial m(arity);
    m.exps[index - 1] = 1;
    Polynomial p(arity);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(Monomial m, const Rational& c)
{
    Polynomial p(m.arity());
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_term() const
{
    auto it = terms_.find(Monomial(arity_));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned Polynomial::degree_in(unsigned var) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        if (m.exps[var - 1] > d) d = m.exps[var - 1];
    return d;
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coeff() const
{
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (m.arity() != arity_) throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (arity_ != other.arity_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (arity_ != other.arity_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r(a.arity_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial r = one(arity_);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> assignments,
                                  unsigned target_arity) const
{
    if (assignments.size() != arity_)
        throw std::invalid_argument("substitute: need one assignment per variable");
    for (const auto& a : assignments)
        if (a.arity() != target_arity)
            throw std::invalid_argument("substitute: assignment arity mismatch");

    // Cache powers of each assignment up to the degree actually used.
    std::vector<std::vector<Polynomial>> powers(arity_);
    auto power = [&](unsigned var, unsigned e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::one(target_arity));
        while (cache.size() <= e) cache.push_back(cache.back() * assignments[var]);
        return cache[e];
    };

    Polynomial result(target_arity);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(target_arity, c);
        for (unsigned v = 0; v < arity_; ++v)
            if (m.exps[v] > 0) term *= power(v, m.exps[v]);
        result += term;
    }
    return result;
}

Polynomial Polynomial::substitute_truncated(std::span<const Polynomial> assignments,
                                            unsigned target_arity,
                                            unsigned max_degree) const
{
    if (assignments.size() != arity_)
        throw std::invalid_argument("substitute: need one assignment per variable");
    for (const auto& a : assignments)
        if (a.arity() != target_arity)
            throw std::invalid_argument("substitute: assignment arity mismatch");

    std::vector<std::vector<Polynomial>> powers(arity_);
    auto power = [&](unsigned var, unsigned e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::one(target_arity));
        while (cache.size() <= e)
            cache.push_back((cache.back() * assignments[var]).truncated(max_degree));
        return cache[e];
    };

    Polynomial result(target_arity);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(target_arity, c);
        for (unsigned v = 0; v < arity_ && !term.is_zero(); ++v)
            if (m.exps[v] > 0) term = (term * power(v, m.exps[v])).truncated(max_degree);
        result += term;
    }
    return result;
}

Polynomial Polynomial::truncated(unsigned max_degree) const
{
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= max_degree) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::embedded(unsigned target_arity, unsigned offset) const
{
    if (offset + arity_ > target_arity)
        throw std::invalid_argument("embedded: variables do not fit in target arity");
    Polynomial r(target_arity);
    for (const auto& [m, c] : terms_) {
        Monomial shifted(target_arity);
        for (unsigned v = 0; v < arity_; ++v) shifted.exps[v + offset] = m.exps[v];
        r.terms_.emplace(std::move(shifted), c);
    }
    return r;
}

Polynomial Polynomial::derivative(unsigned var) const
{
    if (var < 1 || var > arity_) throw std::invalid_argument("derivative: bad variable");
    Polynomial r(arity_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exps[var - 1];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exps[var - 1] = e - 1;
        r.add_term(dm, c * e);
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != arity_) throw std::invalid_argument("evaluate: point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (unsigned v = 0; v < arity_; ++v)
            if (m.exps[v] > 0) t *= rational_pow(point[v], m.exps[v]);
        acc += t;
    }
    return acc;
}

bool Polynomial::is_canonical() const
{
    for (const auto& [m, c] : terms_)
        if (c == 0 || m.arity() != arity_) return false;
    return true;
}

std::string Polynomial::str(bool spaces) const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    const char* plus = spaces ? " + " : "+";
    const char* minus = spaces ? " - " : "-";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (c < 0 ? minus : plus);
            if (a < 0) a = -a;
        }
        first = false;

        bool wrote_coeff = false;
        if (a != 1 || m.is_unit()) {
            out << a.str();
            wrote_coeff = true;
        }
        bool first_factor = !wrote_coeff;
        for (unsigned v = 0; v < arity_; ++v) {
            if (m.exps[v] == 0) continue;
            if (!first_factor) out << "*";
            first_factor = false;
            out << "x" << (v + 1);
            if (m.exps[v] > 1) out << "^" << m.exps[v];
        }
    }
    return out.str();
}

} // namespace opcal
