#include <doctest.h>

#include <string>
#include <vector>

#include "polymean/errors.hpp"
#include "polymean/expr.hpp"
#include "parser_corpus.hpp"
#include "test_support.hpp"

using namespace polymean;
using polymean::testing::Gen;

namespace {

SymPoly mono(int a, int b, GaussianRational c = GaussianRational(1)) {
    return SymPoly::term(Monomial{a, b, 0, 0, 0}, c);
}

std::size_t error_position(const std::string& text) {
    try {
        parse_poly(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("parse_poly examples") {
    CHECK(parse_poly("(z+zbar)^2") == mono(2, 0) + mono(1, 1, GaussianRational(2)) + mono(0, 2));
    const SymPoly p = parse_poly("z^2*zbar - (1+2i)*z");
    CHECK(p.terms().size() == 2);
    CHECK(p.coefficient(Monomial{2, 1, 0, 0, 0}) == GaussianRational(1));
    CHECK(p.coefficient(Monomial{1, 0, 0, 0, 0}) == -GaussianRational(Rational(1), Rational(2)));
    CHECK_THROWS_AS(parse_poly("z^-1"), ParseError);
}

TEST_CASE("literals") {
    CHECK(parse_poly("3/2") == SymPoly(GaussianRational(Rational(3, 2))));
    CHECK(parse_poly("i") == SymPoly(GaussianRational::i()));
    CHECK(parse_poly("3/2i") == SymPoly(GaussianRational(Rational(0), Rational(3, 2))));
    CHECK(parse_poly("(1-2i)") == SymPoly(GaussianRational(Rational(1), Rational(-2))));
    CHECK(parse_poly("(1/2+3/4i)*zbar") == mono(0, 1, GaussianRational(Rational(1, 2), Rational(3, 4))));
    CHECK(parse_poly("4/6") == SymPoly(GaussianRational(Rational(2, 3))));
    CHECK(parse_poly("0*z").is_zero());
    CHECK(parse_poly("z^0") == SymPoly(1));
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_poly("z+zbar*z") == mono(1, 0) + mono(1, 1));
    CHECK(parse_poly("2*z^2") == mono(2, 0, GaussianRational(2)));
    CHECK(parse_poly("z-zbar-z") == -mono(0, 1));
    CHECK(parse_poly("-z^2") == -mono(2, 0));
    CHECK(parse_poly("-(z+1)*zbar") == -mono(1, 1) - mono(0, 1));
    CHECK(error_position("(z)^2^3") == 5);
    CHECK(parse_poly("((z)^2)^3") == mono(6, 0));
    CHECK(parse_poly(" z *  zbar ") == mono(1, 1));
}

TEST_CASE("syntax errors carry positions") {
    CHECK(error_position("z^-1") == 2);
    CHECK(error_position("z^zbar") == 2);
    CHECK(error_position("w+1") == 0);
    CHECK(error_position("2z") == 1);
    CHECK(error_position("z zbar") == 2);
    CHECK(error_position("(z+1") == 4);
    CHECK(error_position("z+") == 2);
    CHECK(error_position("") == 0);
    CHECK(error_position("z^") == 2);
    CHECK(error_position("z^1.5") == 3);
    CHECK(error_position("z)") == 1);
    CHECK(error_position("zbarz") == 0);
    CHECK(error_position("1/0") == 0);
    try {
        parse_poly("z^-1");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("syntax error at position 2", 0) == 0);
    }
}

TEST_CASE("exponents above the degree cap are refused") {
    CHECK_THROWS_AS(parse_poly("z^65"), ResourceError);
    CHECK_THROWS_AS(parse_poly("z^99999999999999999999"), ResourceError);
    CHECK_THROWS_AS(parse_poly("(z^40)*(z^40)"), ResourceError);
    CHECK_NOTHROW(parse_poly("z^64"));
}

TEST_CASE("round trip through the printed form") {
    const auto corpus = testing::expression_corpus();
    Gen gen(41);
    REQUIRE(corpus.size() == 50);
    for (const auto& text : corpus) {
        CAPTURE(text);
        const SymPoly p = parse_poly(text);
        const std::string printed = p.str();
        CAPTURE(printed);
        REQUIRE(parse_poly(printed) == p);
        REQUIRE(parse_poly(printed).str() == printed);
    }
    for (int trial = 0; trial < 500; ++trial) {
        const SymPoly p = gen.pure_poly(4, 4, 0.3, 9);
        REQUIRE(parse_poly(p.str()) == p);
    }
}

TEST_CASE("AST shape") {
    const auto ast = parse_expression("-(z+1)*zbar^2");
    REQUIRE(ast->kind == ExprNode::Kind::Product);
    CHECK(ast->children[0]->kind == ExprNode::Kind::Negate);
    CHECK(ast->children[0]->children[0]->kind == ExprNode::Kind::Group);
    CHECK(ast->children[1]->kind == ExprNode::Kind::Power);
    CHECK(ast->children[1]->exponent == 2);
    CHECK(ast->children[1]->children[0]->kind == ExprNode::Kind::Zbar);
    CHECK(parse_expression("(1+2i)")->kind == ExprNode::Kind::Literal);
    CHECK(parse_expression("(1+z)")->kind == ExprNode::Kind::Group);
    const auto toks = tokenize("zbar^2 + 3/4i");
    REQUIRE(toks.size() == 6);
    CHECK(toks[0].kind == TokenKind::Zbar);
    CHECK(toks[2].isNatural);
    CHECK(toks[4].value == GaussianRational(Rational(0), Rational(3, 4)));
    CHECK(toks[5].kind == TokenKind::End);
}
