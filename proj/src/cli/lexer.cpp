#include <cctype>

#include "polymean/errors.hpp"
#include "polymean/expr.hpp"

namespace polymean {

namespace {

bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("syntax error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token tok;
        tok.position = i;
        if (is_digit(c)) {
            std::size_t j = i;
            while (j < text.size() && is_digit(text[j])) ++j;
            bool slash = false;
            if (j + 1 < text.size() && text[j] == '/' && is_digit(text[j + 1])) {
                slash = true;
                ++j;
                while (j < text.size() && is_digit(text[j])) ++j;
            }
            Rational r;
            try {
                r = Rational::parse(text.substr(i, j - i));
            } catch (const ParameterError& e) {
                throw ParseError(i, e.what());
            }
            bool imaginary = false;
            if (j < text.size() && text[j] == 'i' && (j + 1 == text.size() || !is_ident(text[j + 1]))) {
                imaginary = true;
                ++j;
            }
            tok.kind = TokenKind::Literal;
            tok.value = imaginary ? GaussianRational(Rational(0), r) : GaussianRational(r);
            tok.isNatural = !slash && !imaginary;
            tok.text = std::string(text.substr(i, j - i));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && is_ident(text[j])) ++j;
            tok.text = std::string(text.substr(i, j - i));
            if (tok.text == "z") {
                tok.kind = TokenKind::Z;
            } else if (tok.text == "zbar") {
                tok.kind = TokenKind::Zbar;
            } else if (tok.text == "i") {
                tok.kind = TokenKind::Literal;
                tok.value = GaussianRational::i();
            } else {
                throw ParseError(i, "unknown symbol '" + tok.text + "'");
            }
            i = j;
        } else {
            switch (c) {
                case '+': tok.kind = TokenKind::Plus; break;
                case '-': tok.kind = TokenKind::Minus; break;
                case '*': tok.kind = TokenKind::Star; break;
                case '^': tok.kind = TokenKind::Caret; break;
                case '(': tok.kind = TokenKind::LParen; break;
                case ')': tok.kind = TokenKind::RParen; break;
                default: throw ParseError(i, std::string("unexpected character '") + c + "'");
            }
            tok.text = std::string(1, c);
            ++i;
        }
        tokens.push_back(std::move(tok));
    }
    Token end;
    end.kind = TokenKind::End;
    end.position = text.size();
    tokens.push_back(end);
    return tokens;
}

}  // namespace polymean
