#include <string>

#include "polymean/errors.hpp"
#include "polymean/expr.hpp"

namespace polymean {

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprAst parse() {
        ExprAst root = parse_expr();
        if (peek().kind != TokenKind::End) {
            if (starts_base(peek().kind)) throw ParseError(peek().position, "implicit multiplication is not allowed");
            throw ParseError(peek().position, "unexpected '" + peek().text + "'");
        }
        return root;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[k];
    }

    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    static bool starts_base(TokenKind k) {
        return k == TokenKind::Z || k == TokenKind::Zbar || k == TokenKind::Literal || k == TokenKind::LParen;
    }

    static ExprAst node(ExprNode::Kind kind, std::size_t position) {
        auto n = std::make_unique<ExprNode>();
        n->kind = kind;
        n->position = position;
        return n;
    }

    static ExprAst binary(ExprNode::Kind kind, std::size_t position, ExprAst lhs, ExprAst rhs) {
        auto n = node(kind, position);
        n->children.push_back(std::move(lhs));
        n->children.push_back(std::move(rhs));
        return n;
    }

    ExprAst parse_expr() {
        ExprAst lhs = parse_term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const Token& op = advance();
            const auto kind = op.kind == TokenKind::Plus ? ExprNode::Kind::Sum : ExprNode::Kind::Difference;
            lhs = binary(kind, op.position, std::move(lhs), parse_term());
        }
        return lhs;
    }

    ExprAst parse_term() {
        ExprAst lhs = parse_factor();
        while (peek().kind == TokenKind::Star) {
            const Token& op = advance();
            lhs = binary(ExprNode::Kind::Product, op.position, std::move(lhs), parse_factor());
        }
        return lhs;
    }

    ExprAst parse_factor() {
        ExprAst base = parse_base();
        if (peek().kind != TokenKind::Caret) return base;
        const Token& caret = advance();
        const Token& e = peek();
        if (e.kind == TokenKind::Minus) throw ParseError(e.position, "negative exponent");
        if (e.kind != TokenKind::Literal || !e.isNatural) {
            throw ParseError(e.position, "exponent must be a nonnegative integer literal");
        }
        advance();
        const Rational value = e.value.re();
        if (value > Rational(degree_cap())) {
            throw ResourceError("exponent " + e.text + " exceeds degree cap " + std::to_string(degree_cap()));
        }
        auto n = node(ExprNode::Kind::Power, caret.position);
        n->exponent = static_cast<int>(value.numerator().get_si());
        n->children.push_back(std::move(base));
        return n;
    }

    // "(" rational ("+" | "-") rational "i" ")" as a single complex literal.
    bool try_complex_literal(ExprAst& out) {
        const Token& re = peek(1);
        const Token& sign = peek(2);
        const Token& im = peek(3);
        const Token& close = peek(4);
        if (re.kind != TokenKind::Literal || !re.value.is_real()) return false;
        if (sign.kind != TokenKind::Plus && sign.kind != TokenKind::Minus) return false;
        if (im.kind != TokenKind::Literal || !im.value.re().is_zero() || im.value.im().is_zero()) return false;
        if (close.kind != TokenKind::RParen) return false;
        const std::size_t position = peek().position;
        GaussianRational v = sign.kind == TokenKind::Plus ? re.value + im.value : re.value - im.value;
        for (int k = 0; k < 5; ++k) advance();
        out = node(ExprNode::Kind::Literal, position);
        out->value = std::move(v);
        return true;
    }

    ExprAst parse_base() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Z: advance(); return node(ExprNode::Kind::Z, t.position);
            case TokenKind::Zbar: advance(); return node(ExprNode::Kind::Zbar, t.position);
            case TokenKind::Literal: {
                advance();
                auto n = node(ExprNode::Kind::Literal, t.position);
                n->value = t.value;
                return n;
            }
            case TokenKind::Minus: {
                advance();
                auto n = node(ExprNode::Kind::Negate, t.position);
                n->children.push_back(parse_factor());
                return n;
            }
            case TokenKind::LParen: {
                ExprAst literal;
                if (try_complex_literal(literal)) return literal;
                advance();
                auto n = node(ExprNode::Kind::Group, t.position);
                n->children.push_back(parse_expr());
                if (peek().kind != TokenKind::RParen) throw ParseError(peek().position, "expected ')'");
                advance();
                return n;
            }
            case TokenKind::End: throw ParseError(t.position, "unexpected end of expression");
            default: throw ParseError(t.position, "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprAst parse_expression(std::string_view text) { return Parser(tokenize(text)).parse(); }

SymPoly lower(const ExprNode& n) {
    using K = ExprNode::Kind;
    switch (n.kind) {
        case K::Literal: return SymPoly(n.value);
        case K::Z: return SymPoly::z();
        case K::Zbar: return SymPoly::zbar();
        case K::Negate: return -lower(*n.children[0]);
        case K::Group: return lower(*n.children[0]);
        case K::Sum: return lower(*n.children[0]) + lower(*n.children[1]);
        case K::Difference: return lower(*n.children[0]) - lower(*n.children[1]);
        case K::Product: return lower(*n.children[0]) * lower(*n.children[1]);
        case K::Power: return poly_pow(lower(*n.children[0]), n.exponent);
    }
    throw std::logic_error("unhandled expression node");
}

SymPoly parse_poly(std::string_view text) { return lower(*parse_expression(text)); }

}  // namespace polymean
