#ifndef OPCAL_PARSE_HPP
#define OPCAL_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "opcal/dendriform.hpp"
#include "opcal/homotopy.hpp"
#include "opcal/ncpolynomial.hpp"
#include "opcal/rational_function.hpp"

namespace opcal {

struct ParseError : std::runtime_error {
    std::size_t line, column;
    std::string expected;
    ParseError(const std::string& what, std::size_t line, std::size_t column,
               std::string expected_tokens);
};

// Expression AST for the CLI language: rational literals, variables x<k>,
// + - * / with unary minus, integer ^. Juxtaposition is not multiplication.
struct Expr {
    enum class Kind { Number, Variable, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Kind::Number;
    Rational number;              // Number
    unsigned var_index = 0;       // Variable (1-based)
    std::vector<Expr> operands;   // children for the operator kinds
    unsigned exponent = 0;        // Pow
};

Expr parse_expression(std::string_view text);
unsigned max_variable_index(const Expr& e);

// Evaluation into the value kinds. Division in the polynomial contexts is
// accepted only for a divisor that evaluates to a nonzero constant; anything
// else is reported as a parse-level error.
Polynomial expr_to_polynomial(const Expr& e, unsigned arity);
RationalFunction expr_to_ratfn(const Expr& e, unsigned arity);
NCPolynomial expr_to_ncpoly(const Expr& e, unsigned arity);

// One-stop helpers: parse and evaluate with inferred arity max(min_arity,
// largest variable index, 1).
Polynomial parse_polynomial(std::string_view text, unsigned min_arity = 0);
RationalFunction parse_ratfn(std::string_view text, unsigned min_arity = 0);
NCPolynomial parse_ncpoly(std::string_view text, unsigned min_arity = 0);

// Tree literals: '|' is a leaf, '(L^R)' a graft.
PlanarBinaryTree parse_tree(std::string_view text);

// Labelled-tree literals: leaf, D(t), M<k>(t1,..,tk), DM<k>(t1,..,tk).
LabelledTree parse_ltree(std::string_view text);

} // namespace opcal

#endif
