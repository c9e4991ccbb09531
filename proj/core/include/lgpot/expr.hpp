#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lgpot/laurent.hpp"
#include "lgpot/scalar.hpp"

namespace lgpot {

/// Abstract syntax tree for the expression language
///
///   expr    := term (("+"|"-") term)*
///   term    := factor ("*" factor)*
///   factor  := "-" factor | power
///   power   := atom ("^" int)?          -- non-associative
///   atom    := literal | ident | "(" expr ")"
///   literal := digits ("/" digits)? ("i")?
///   int     := "-"? digits
///
/// Multiplication is always explicit; "/" appears only inside numeric
/// literals. The identifier "i" denotes the imaginary unit unless it is a
/// declared variable. Unknown identifiers are errors.
struct Expression {
    enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Pow };

    Kind kind;
    Scalar literal;                    // Literal
    std::size_t var_index = 0;         // Var
    std::int64_t exponent = 0;         // Pow
    std::vector<Expression> children;  // Neg(1), Add/Sub/Mul(2), Pow(1)
};

/// Parses the source against the declared ordered variable list.
/// Throws ParseError (with byte offset) on malformed input, DomainError on
/// malformed variable declarations.
Expression parse_expression(std::string_view src, const std::vector<std::string>& vars);

/// Evaluates the AST into a canonical Laurent polynomial over vars.
/// Negative powers are admitted for units only.
LaurentPoly lower(const Expression& e, const std::vector<std::string>& vars);

/// Deterministic textual form; terms ordered by total degree, ties broken
/// by descending lexicographic exponent order. Fixed point of
/// lower(parse(render(f))).
std::string render(const LaurentPoly& f);

/// parse + lower in one step.
LaurentPoly parse_poly(std::string_view src, const std::vector<std::string>& vars);

/// Parses a constant expression (no variables) into a scalar.
Scalar parse_scalar(std::string_view src);

} // namespace lgpot
