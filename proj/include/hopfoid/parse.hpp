#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfoid/multipoly.hpp"
#include "hopfoid/rational.hpp"
#include "hopfoid/unipoly.hpp"

namespace hopfoid {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t column)
        : std::runtime_error(what + " (column " + std::to_string(column + 1) + ")"),
          column(column) {}
    size_t column;
};

// Expression tree for the input grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' int)?            (the int may be negative)
//   atom   := number | ident | '(' expr ')'
// Numbers are integers or rationals "p/q".
struct ExprNode {
    enum class Kind { Number, Variable, Add, Sub, Mul, Neg, Pow };
    Kind kind;
    Rational value;                       // Number
    std::string name;                     // Variable
    long exponent = 0;                    // Pow
    std::vector<ExprNode> kids;
};

ExprNode parse_expr(const std::string& src);

// Evaluators; unknown variables and illegal inversions raise errors.
MultiPoly eval_multipoly(const ExprNode& ast, const VarTablePtr& vars);
MultiPoly parse_multipoly(const std::string& src, const VarTablePtr& vars);

// Univariate case: the only admissible variable is "x".
UniPoly eval_unipoly(const ExprNode& ast);
UniPoly parse_unipoly(const std::string& src);

}  // namespace hopfoid
