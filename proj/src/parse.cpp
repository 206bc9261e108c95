#include "opcal/parse.hpp"

#include <cctype>
#include <sstream>

namespace opcal {

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t pos)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= text.size();
    }
    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& expected)
    {
        auto [line, col] = line_col(text, pos);
        std::ostringstream msg;
        msg << "parse error at " << line << ":" << col << ": expected " << expected;
        throw ParseError(msg.str(), line, col, expected);
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("'") + c + "'");
    }
    unsigned long read_integer()
    {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("an integer");
        unsigned long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
            ++pos;
        }
        return v;
    }
};

struct ExprParser {
    Lexer lex;

    Expr parse()
    {
        Expr e = expression();
        if (!lex.eof()) lex.fail("end of input, '+', '-', '*', '/', or '^'");
        return e;
    }

    Expr expression()
    {
        Expr e = term();
        for (;;) {
            if (lex.accept('+')) {
                Expr r;
                r.kind = Expr::Kind::Add;
                r.operands.push_back(std::move(e));
                r.operands.push_back(term());
                e = std::move(r);
            } else if (lex.accept('-')) {
                Expr r;
                r.kind = Expr::Kind::Sub;
                r.operands.push_back(std::move(e));
                r.operands.push_back(term());
                e = std::move(r);
            } else {
                return e;
            }
        }
    }

    Expr term()
    {
        Expr e = unary();
        for (;;) {
            if (lex.accept('*')) {
                Expr r;
                r.kind = Expr::Kind::Mul;
                r.operands.push_back(std::move(e));
                r.operands.push_back(unary());
                e = std::move(r);
            } else if (lex.accept('/')) {
                Expr r;
                r.kind = Expr::Kind::Div;
                r.operands.push_back(std::move(e));
                r.operands.push_back(unary());
                e = std::move(r);
            } else {
                return e;
            }
        }
    }

    Expr unary()
    {
        if (lex.accept('-')) {
            Expr r;
            r.kind = Expr::Kind::Neg;
            r.operands.push_back(unary());
            return r;
        }
        return power();
    }

    Expr power()
    {
        Expr base = atom();
        if (lex.accept('^')) {
            Expr r;
            r.kind = Expr::Kind::Pow;
            r.operands.push_back(std::move(base));
            r.exponent = static_cast<unsigned>(lex.read_integer());
            return r;
        }
        return base;
    }

    Expr atom()
    {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            Expr e = expression();
            lex.expect(')');
            return e;
        }
        if (c == 'x') {
            ++lex.pos;
            unsigned long idx = lex.read_integer();
            if (idx == 0) lex.fail("a variable index >= 1");
            Expr e;
            e.kind = Expr::Kind::Variable;
            e.var_index = static_cast<unsigned>(idx);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e;
            e.kind = Expr::Kind::Number;
            e.number = Rational(lex.read_integer());
            return e;
        }
        lex.fail("a number, a variable like x1, '(' or '-'");
    }
};

} // namespace

ParseError::ParseError(const std::string& what, std::size_t line_, std::size_t column_,
                       std::string expected_tokens)
    : std::runtime_error(what), line(line_), column(column_),
      expected(std::move(expected_tokens))
{
}

Expr parse_expression(std::string_view text)
{
    ExprParser p{Lexer{text}};
    return p.parse();
}

unsigned max_variable_index(const Expr& e)
{
    unsigned m = e.kind == Expr::Kind::Variable ? e.var_index : 0;
    for (const auto& op : e.operands) m = std::max(m, max_variable_index(op));
    return m;
}

namespace {

[[noreturn]] void division_error()
{
    throw ParseError("division is only available in a rational-function context "
                     "(or by a nonzero constant)",
                     1, 1, "a constant divisor");
}

} // namespace

Polynomial expr_to_polynomial(const Expr& e, unsigned arity)
{
    switch (e.kind) {
    case Expr::Kind::Number: return Polynomial::constant(arity, e.number);
    case Expr::Kind::Variable: return Polynomial::variable(arity, e.var_index);
    case Expr::Kind::Add:
        return expr_to_polynomial(e.operands[0], arity) +
               expr_to_polynomial(e.operands[1], arity);
    case Expr::Kind::Sub:
        return expr_to_polynomial(e.operands[0], arity) -
               expr_to_polynomial(e.operands[1], arity);
    case Expr::Kind::Mul:
        return expr_to_polynomial(e.operands[0], arity) *
               expr_to_polynomial(e.operands[1], arity);
    case Expr::Kind::Div: {
        Polynomial divisor = expr_to_polynomial(e.operands[1], arity);
        if (!divisor.is_constant() || divisor.is_zero()) division_error();
        return expr_to_polynomial(e.operands[0], arity) *
               (Rational(1) / divisor.constant_term());
    }
    case Expr::Kind::Neg: return -expr_to_polynomial(e.operands[0], arity);
    case Expr::Kind::Pow: return expr_to_polynomial(e.operands[0], arity).pow(e.exponent);
    }
    throw std::logic_error("unreachable");
}

RationalFunction expr_to_ratfn(const Expr& e, unsigned arity)
{
    switch (e.kind) {
    case Expr::Kind::Number:
        return RationalFunction::constant(arity, e.number);
    case Expr::Kind::Variable: return RationalFunction::variable(arity, e.var_index);
    case Expr::Kind::Add:
        return expr_to_ratfn(e.operands[0], arity) + expr_to_ratfn(e.operands[1], arity);
    case Expr::Kind::Sub:
        return expr_to_ratfn(e.operands[0], arity) - expr_to_ratfn(e.operands[1], arity);
    case Expr::Kind::Mul:
        return expr_to_ratfn(e.operands[0], arity) * expr_to_ratfn(e.operands[1], arity);
    case Expr::Kind::Div:
        return expr_to_ratfn(e.operands[0], arity) / expr_to_ratfn(e.operands[1], arity);
    case Expr::Kind::Neg: return -expr_to_ratfn(e.operands[0], arity);
    case Expr::Kind::Pow: {
        RationalFunction base = expr_to_ratfn(e.operands[0], arity);
        RationalFunction r = RationalFunction::one(arity);
        for (unsigned k = 0; k < e.exponent; ++k) r *= base;
        return r;
    }
    }
    throw std::logic_error("unreachable");
}

NCPolynomial expr_to_ncpoly(const Expr& e, unsigned arity)
{
    switch (e.kind) {
    case Expr::Kind::Number: return NCPolynomial::constant(arity, e.number);
    case Expr::Kind::Variable: return NCPolynomial::variable(arity, e.var_index);
    case Expr::Kind::Add:
        return expr_to_ncpoly(e.operands[0], arity) +
               expr_to_ncpoly(e.operands[1], arity);
    case Expr::Kind::Sub:
        return expr_to_ncpoly(e.operands[0], arity) -
               expr_to_ncpoly(e.operands[1], arity);
    case Expr::Kind::Mul:
        return expr_to_ncpoly(e.operands[0], arity) *
               expr_to_ncpoly(e.operands[1], arity);
    case Expr::Kind::Div: {
        NCPolynomial divisor = expr_to_ncpoly(e.operands[1], arity);
        Rational c = divisor.constant_term();
        if (divisor.max_word_length() > 0 || c == 0) division_error();
        return expr_to_ncpoly(e.operands[0], arity) * (Rational(1) / c);
    }
    case Expr::Kind::Neg: return -expr_to_ncpoly(e.operands[0], arity);
    case Expr::Kind::Pow: {
        NCPolynomial base = expr_to_ncpoly(e.operands[0], arity);
        NCPolynomial r = NCPolynomial::one(arity);
        for (unsigned k = 0; k < e.exponent; ++k) r *= base;
        return r;
    }
    }
    throw std::logic_error("unreachable");
}

namespace {

unsigned inferred_arity(const Expr& e, unsigned min_arity)
{
    return std::max({min_arity, max_variable_index(e), 1u});
}

} // namespace

Polynomial parse_polynomial(std::string_view text, unsigned min_arity)
{
    Expr e = parse_expression(text);
    return expr_to_polynomial(e, inferred_arity(e, min_arity));
}

RationalFunction parse_ratfn(std::string_view text, unsigned min_arity)
{
    Expr e = parse_expression(text);
    return expr_to_ratfn(e, inferred_arity(e, min_arity));
}

NCPolynomial parse_ncpoly(std::string_view text, unsigned min_arity)
{
    Expr e = parse_expression(text);
    return expr_to_ncpoly(e, inferred_arity(e, min_arity));
}

namespace {

PlanarBinaryTree parse_tree_inner(Lexer& lex)
{
    if (lex.accept('|')) return PlanarBinaryTree::leaf();
    if (lex.accept('(')) {
        PlanarBinaryTree left = parse_tree_inner(lex);
        lex.expect('^');
        PlanarBinaryTree right = parse_tree_inner(lex);
        lex.expect(')');
        return PlanarBinaryTree::graft(std::move(left), std::move(right));
    }
    lex.fail("'|' or '('");
}

LabelledTree parse_ltree_inner(Lexer& lex)
{
    lex.skip_ws();
    std::size_t start = lex.pos;
    while (lex.pos < lex.text.size() &&
           std::isalpha(static_cast<unsigned char>(lex.text[lex.pos])))
        ++lex.pos;
    std::string word(lex.text.substr(start, lex.pos - start));
    if (word == "leaf") return LabelledTree::leaf();
    GenLabel label = GenLabel::der();
    if (word == "D") {
        label = GenLabel::der();
    } else if (word == "M" || word == "DM") {
        unsigned long k = lex.read_integer();
        if (k < 2) lex.fail("an arity >= 2 after M/DM");
        label = word == "M" ? GenLabel::m(static_cast<unsigned>(k))
                            : GenLabel::dm(static_cast<unsigned>(k));
    } else {
        lex.pos = start;
        lex.fail("'leaf', 'D', 'M<k>' or 'DM<k>'");
    }
    lex.expect('(');
    std::vector<LabelledTree> children;
    children.push_back(parse_ltree_inner(lex));
    while (lex.accept(',')) children.push_back(parse_ltree_inner(lex));
    lex.expect(')');
    return LabelledTree::node(label, std::move(children));
}

} // namespace

PlanarBinaryTree parse_tree(std::string_view text)
{
    Lexer lex{text};
    PlanarBinaryTree t = parse_tree_inner(lex);
    if (!lex.eof()) lex.fail("end of input");
    return t;
}

LabelledTree parse_ltree(std::string_view text)
{
    Lexer lex{text};
    LabelledTree t = parse_ltree_inner(lex);
    if (!lex.eof()) lex.fail("end of input");
    return t;
}

} // namespace opcal
