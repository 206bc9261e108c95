#ifndef OPCAL_NCPOLYNOMIAL_HPP
#define OPCAL_NCPOLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "opcal/polynomial.hpp"
#include "opcal/rational.hpp"

namespace opcal {

// A word in the letters x1..xn, stored as 1-based variable indices. The empty
// word is the unit of the free monoid.
struct Word {
    std::vector<std::uint32_t> letters;

    Word() = default;
    explicit Word(std::vector<std::uint32_t> ls) : letters(std::move(ls)) {}

    unsigned length() const { return static_cast<unsigned>(letters.size()); }
    bool empty() const { return letters.empty(); }
    Word concat(const Word& other) const;

    bool operator==(const Word& other) const { return letters == other.letters; }
};

// Length first, then lexicographic; map iteration is degree-ascending.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
};

class NCPolynomial {
public:
    using TermMap = std::map<Word, Rational, WordLess>;

    NCPolynomial() : arity_(1) {}
    explicit NCPolynomial(unsigned arity);

    static NCPolynomial constant(unsigned arity, const Rational& c);
    static NCPolynomial one(unsigned arity) { return constant(arity, Rational(1)); }
    static NCPolynomial variable(unsigned arity, unsigned index);
    static NCPolynomial word_monomial(unsigned arity, Word w, const Rational& c);

    unsigned arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff(Word()); }
    unsigned max_word_length() const;

    void add_term(const Word& w, const Rational& c);

    NCPolynomial operator-() const;
    NCPolynomial& operator+=(const NCPolynomial& other);
    NCPolynomial& operator-=(const NCPolynomial& other);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    // Bilinear extension of word concatenation, left factor's letters first.
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
    NCPolynomial& operator*=(const NCPolynomial& other) { return *this = *this * other; }
    NCPolynomial& operator*=(const Rational& c);
    friend NCPolynomial operator*(NCPolynomial p, const Rational& c) { return p *= c; }
    friend NCPolynomial operator*(const Rational& c, NCPolynomial p) { return p *= c; }

    bool operator==(const NCPolynomial& other) const
    {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }

    // Letterwise substitution: each letter j is replaced by assignments[j-1]
    // and the factors are multiplied in the order of the word.
    NCPolynomial substitute(std::span<const NCPolynomial> assignments,
                            unsigned target_arity) const;
    NCPolynomial substitute_truncated(std::span<const NCPolynomial> assignments,
                                      unsigned target_arity, unsigned max_length) const;

    NCPolynomial truncated(unsigned max_length) const;
    NCPolynomial embedded(unsigned target_arity, unsigned offset) const;

    // Commutative quotient: sorts every word into a monomial.
    Polynomial abelianize() const;

    bool is_canonical() const;

    std::string str() const;

private:
    unsigned arity_;
    TermMap terms_;
};

// Noncommutative power series truncated in word length. All operations
// discard words longer than the truncation degree.
class NCSeries {
public:
    NCSeries(unsigned arity, unsigned truncation_degree);
    NCSeries(NCPolynomial p, unsigned truncation_degree);

    static NCSeries constant(unsigned arity, unsigned trunc, const Rational& c);
    static NCSeries one(unsigned arity, unsigned trunc);
    static NCSeries variable(unsigned arity, unsigned trunc, unsigned index);

    unsigned arity() const { return poly_.arity(); }
    unsigned truncation_degree() const { return trunc_; }
    const NCPolynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    Rational constant_term() const { return poly_.constant_term(); }

    NCSeries operator-() const { return NCSeries(-poly_, trunc_); }
    friend NCSeries operator+(const NCSeries& a, const NCSeries& b);
    friend NCSeries operator-(const NCSeries& a, const NCSeries& b);
    friend NCSeries operator*(const NCSeries& a, const NCSeries& b);
    NCSeries& operator+=(const NCSeries& o) { return *this = *this + o; }
    NCSeries& operator-=(const NCSeries& o) { return *this = *this - o; }
    NCSeries& operator*=(const NCSeries& o) { return *this = *this * o; }
    NCSeries& operator*=(const Rational& c);
    friend NCSeries operator*(NCSeries s, const Rational& c) { return s *= c; }

    // Equality of truncated representatives; both operands must share the
    // truncation degree.
    bool operator==(const NCSeries& other) const;

    NCSeries substitute(std::span<const NCSeries> assignments,
                        unsigned target_arity) const;
    NCSeries embedded(unsigned target_arity, unsigned offset) const;
    NCSeries truncated(unsigned max_length) const;

    std::string str() const { return poly_.str(); }

private:
    NCPolynomial poly_;
    unsigned trunc_;
};

// exp(s) = sum s^n/n!; requires zero constant term.
NCSeries series_exp(const NCSeries& s);
// log(s) = sum (-1)^{n+1} (s-1)^n / n; requires constant term 1.
NCSeries series_log(const NCSeries& s);

} // namespace opcal

#endif
