#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polymean/gaussian_rational.hpp"
#include "polymean/sym_poly.hpp"

namespace polymean {

/// Malformed expression text; `position` is the 0-based byte offset of the offending token.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class TokenKind { Literal, Z, Zbar, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::size_t position = 0;
    std::string text;
    /// Literal value; real for "3/2", imaginary for "3/2i" or "i".
    GaussianRational value;
    /// Literal written as a bare nonnegative integer (no slash, no i).
    bool isNatural = false;
};

/// Splits expression text into tokens. Throws ParseError on unknown symbols
/// and stray characters.
std::vector<Token> tokenize(std::string_view text);

struct ExprNode {
    enum class Kind { Literal, Z, Zbar, Negate, Sum, Difference, Product, Power, Group };

    Kind kind = Kind::Literal;
    std::size_t position = 0;
    GaussianRational value;  ///< Literal
    int exponent = 0;        ///< Power
    std::vector<std::unique_ptr<ExprNode>> children;
};

using ExprAst = std::unique_ptr<ExprNode>;

/// Recursive-descent parse of
///   expr    := term (("+" | "-") term)*
///   term    := factor ("*" factor)*
///   factor  := base ("^" nat)?
///   base    := "z" | "zbar" | literal | "(" expr ")" | "-" factor
///   literal := rational | rational? "i" | "(" rational ("+" | "-") rational "i" ")"
/// Implicit multiplication is rejected.
ExprAst parse_expression(std::string_view text);

/// Lowers an AST to its canonical polynomial.
SymPoly lower(const ExprNode& node);

/// parse_expression followed by lower.
SymPoly parse_poly(std::string_view text);

}  // namespace polymean
