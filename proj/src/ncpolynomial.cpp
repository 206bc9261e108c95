#include "opcal/ncpolynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace opcal {

Word Word::concat(const Word& other) const
{
    Word r = *this;
    r.letters.insert(r.letters.end(), other.letters.begin(), other.letters.end());
    return r;
}

NCPolynomial::NCPolynomial(unsigned arity) : arity_(arity)
{
    if (arity == 0) throw std::invalid_argument("arity must be >= 1");
}

NCPolynomial NCPolynomial::constant(unsigned arity, const Rational& c)
{
    NCPolynomial p(arity);
    if (c != 0) p.terms_.emplace(Word(), c);
    return p;
}

NCPolynomial NCPolynomial::variable(unsigned arity, unsigned index)
{
    if (index < 1 || index > arity)
        throw std::invalid_argument("variable index out of range");
    NCPolynomial p(arity);
    p.terms_.emplace(Word({index}), Rational(1));
    return p;
}

NCPolynomial NCPolynomial::word_monomial(unsigned arity, Word w, const Rational& c)
{
    for (auto l : w.letters)
        if (l < 1 || l > arity) throw std::invalid_argument("word letter out of range");
    NCPolynomial p(arity);
    if (c != 0) p.terms_.emplace(std::move(w), c);
    return p;
}

Rational NCPolynomial::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned NCPolynomial::max_word_length() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

void NCPolynomial::add_term(const Word& w, const Rational& c)
{
    if (c == 0) return;
    for (auto l : w.letters)
        if (l < 1 || l > arity_) throw std::invalid_argument("word letter out of range");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPolynomial NCPolynomial::operator-() const
{
    NCPolynomial r(arity_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other)
{
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& other)
{
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b)
{
    if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
    NCPolynomial r(a.arity_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
    return r;
}

NCPolynomial& NCPolynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

NCPolynomial NCPolynomial::substitute(std::span<const NCPolynomial> assignments,
                                      unsigned target_arity) const
{
    if (assignments.size() != arity_)
        throw std::invalid_argument("substitute: need one assignment per variable");
    for (const auto& a : assignments)
        if (a.arity() != target_arity)
            throw std::invalid_argument("substitute: assignment arity mismatch");

    NCPolynomial result(target_arity);
    for (const auto& [w, c] : terms_) {
        NCPolynomial factor = constant(target_arity, c);
        for (auto l : w.letters) factor *= assignments[l - 1];
        result += factor;
    }
    return result;
}

NCPolynomial NCPolynomial::substitute_truncated(std::span<const NCPolynomial> assignments,
                                                unsigned target_arity,
                                                unsigned max_length) const
{
    if (assignments.size() != arity_)
        throw std::invalid_argument("substitute: need one assignment per variable");
    for (const auto& a : assignments)
        if (a.arity() != target_arity)
            throw std::invalid_argument("substitute: assignment arity mismatch");

    NCPolynomial result(target_arity);
    for (const auto& [w, c] : terms_) {
        NCPolynomial factor = constant(target_arity, c);
        for (auto l : w.letters) {
            if (factor.is_zero()) break;
            factor = (factor * assignments[l - 1]).truncated(max_length);
        }
        result += factor;
    }
    return result;
}

NCPolynomial NCPolynomial::truncated(unsigned max_length) const
{
    NCPolynomial r(arity_);
    for (const auto& [w, c] : terms_)
        if (w.length() <= max_length) r.terms_.emplace(w, c);
    return r;
}

NCPolynomial NCPolynomial::embedded(unsigned target_arity, unsigned offset) const
{
    if (offset + arity_ > target_arity)
        throw std::invalid_argument("embedded: variables do not fit in target arity");
    NCPolynomial r(target_arity);
    for (const auto& [w, c] : terms_) {
        Word shifted = w;
        for (auto& l : shifted.letters) l += offset;
        r.terms_.emplace(std::move(shifted), c);
    }
    return r;
}

Polynomial NCPolynomial::abelianize() const
{
    Polynomial p(arity_);
    for (const auto& [w, c] : terms_) {
        Monomial m(arity_);
        for (auto l : w.letters) ++m.exps[l - 1];
        p.add_term(m, c);
    }
    return p;
}

bool NCPolynomial::is_canonical() const
{
    for (const auto& [w, c] : terms_) {
        if (c == 0) return false;
        for (auto l : w.letters)
            if (l < 1 || l > arity_) return false;
    }
    return true;
}

std::string NCPolynomial::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || w.empty()) out << a.str();
        bool first_factor = (a == 1 && !w.empty());
        for (auto l : w.letters) {
            if (!first_factor) out << "*";
            first_factor = false;
            out << "x" << l;
        }
    }
    return out.str();
}

NCSeries::NCSeries(unsigned arity, unsigned truncation_degree)
    : poly_(arity), trunc_(truncation_degree)
{
    if (truncation_degree == 0)
        throw std::invalid_argument("truncation degree must be >= 1");
}

NCSeries::NCSeries(NCPolynomial p, unsigned truncation_degree)
    : poly_(p.truncated(truncation_degree)), trunc_(truncation_degree)
{
    if (truncation_degree == 0)
        throw std::invalid_argument("truncation degree must be >= 1");
}

NCSeries NCSeries::constant(unsigned arity, unsigned trunc, const Rational& c)
{
    return NCSeries(NCPolynomial::constant(arity, c), trunc);
}

NCSeries NCSeries::one(unsigned arity, unsigned trunc)
{
    return constant(arity, trunc, Rational(1));
}

NCSeries NCSeries::variable(unsigned arity, unsigned trunc, unsigned index)
{
    return NCSeries(NCPolynomial::variable(arity, index), trunc);
}

namespace {
unsigned common_trunc(const NCSeries& a, const NCSeries& b)
{
    if (a.truncation_degree() != b.truncation_degree())
        throw std::invalid_argument("series truncation degree mismatch");
    return a.truncation_degree();
}
} // namespace

NCSeries operator+(const NCSeries& a, const NCSeries& b)
{
    return NCSeries(a.poly() + b.poly(), common_trunc(a, b));
}

NCSeries operator-(const NCSeries& a, const NCSeries& b)
{
    return NCSeries(a.poly() - b.poly(), common_trunc(a, b));
}

NCSeries operator*(const NCSeries& a, const NCSeries& b)
{
    return NCSeries(a.poly() * b.poly(), common_trunc(a, b));
}

NCSeries& NCSeries::operator*=(const Rational& c)
{
    poly_ *= c;
    return *this;
}

bool NCSeries::operator==(const NCSeries& other) const
{
    common_trunc(*this, other);
    return poly_ == other.poly_;
}

NCSeries NCSeries::substitute(std::span<const NCSeries> assignments,
                              unsigned target_arity) const
{
    std::vector<NCPolynomial> polys;
    polys.reserve(assignments.size());
    for (const auto& s : assignments) {
        common_trunc(*this, s);
        polys.push_back(s.poly());
    }
    return NCSeries(poly_.substitute_truncated(polys, target_arity, trunc_), trunc_);
}

NCSeries NCSeries::embedded(unsigned target_arity, unsigned offset) const
{
    return NCSeries(poly_.embedded(target_arity, offset), trunc_);
}

NCSeries NCSeries::truncated(unsigned max_length) const
{
    return NCSeries(poly_.truncated(max_length), trunc_);
}

NCSeries series_exp(const NCSeries& s)
{
    if (s.constant_term() != 0)
        throw std::domain_error("series_exp needs zero constant term");
    unsigned d = s.truncation_degree();
    NCSeries acc = NCSeries::one(s.arity(), d);
    NCSeries term = NCSeries::one(s.arity(), d);
    for (unsigned n = 1; n <= d; ++n) {
        term = term * s;
        term *= Rational(1, n);
        acc += term;
    }
    return acc;
}

NCSeries series_log(const NCSeries& s)
{
    if (s.constant_term() != 1)
        throw std::domain_error("series_log needs constant term 1");
    unsigned d = s.truncation_degree();
    NCSeries u = s - NCSeries::one(s.arity(), d);
    NCSeries acc(s.arity(), d);
    NCSeries pw = NCSeries::one(s.arity(), d);
    for (unsigned n = 1; n <= d; ++n) {
        pw = pw * u;
        Rational c = Rational(n % 2 == 1 ? 1 : -1, n);
        acc += pw * c;
    }
    return acc;
}

} // namespace opcal
