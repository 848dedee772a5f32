#include "virg/parse.hpp"

#include "virg/error.hpp"

#include <cctype>
#include <string>

namespace virg {

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            out.push_back(Token{TokenKind::number, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            out.push_back(Token{TokenKind::identifier, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        static constexpr std::string_view kSymbols = "+-*/^()[],";
        if (kSymbols.find(ch) != std::string_view::npos) {
            out.push_back(Token{TokenKind::symbol, std::string(1, ch), i});
            ++i;
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, ch) + "' at offset " +
                         std::to_string(i) + " in '" + std::string(text) + "'");
    }
    out.push_back(Token{TokenKind::end, "", text.size()});
    return out;
}

bool TokenCursor::accept(char symbol) {
    if (peek().kind == TokenKind::symbol && peek().text[0] == symbol) {
        next();
        return true;
    }
    return false;
}

void TokenCursor::expect(char symbol) {
    if (!accept(symbol)) {
        fail(std::string("expected '") + symbol + "'");
    }
}

void TokenCursor::fail(const std::string& message) const {
    throw ParseError(message + " at offset " + std::to_string(peek().offset) + " in '" +
                     std::string(source_) + "'");
}

namespace {

Scalar parse_sum(TokenCursor& cur, const Ring& ring);

Scalar parse_atom(TokenCursor& cur, const Ring& ring) {
    const Token& tok = cur.peek();
    if (tok.kind == TokenKind::number) {
        Integer value(cur.next().text);
        return Scalar(Rational(value));
    }
    if (tok.kind == TokenKind::identifier) {
        const std::string name = cur.peek().text;
        auto idx = ring.index_of(name);
        if (!idx) {
            cur.fail("unknown symbol '" + name + "'");
        }
        cur.next();
        return Scalar::variable(*idx);
    }
    if (cur.accept('(')) {
        Scalar inner = parse_sum(cur, ring);
        cur.expect(')');
        return inner;
    }
    cur.fail("expected a number, symbol or '('");
}

Scalar parse_power(TokenCursor& cur, const Ring& ring) {
    Scalar base = parse_atom(cur, ring);
    if (cur.accept('^')) {
        if (cur.peek().kind != TokenKind::number) {
            cur.fail("expected a non-negative integer exponent");
        }
        const unsigned long e = std::stoul(cur.next().text);
        Scalar result(1L);
        for (unsigned long k = 0; k < e; ++k) {
            result *= base;
        }
        return result;
    }
    return base;
}

Scalar parse_unary(TokenCursor& cur, const Ring& ring) {
    if (cur.accept('-')) {
        return -parse_unary(cur, ring);
    }
    if (cur.accept('+')) {
        return parse_unary(cur, ring);
    }
    return parse_power(cur, ring);
}

Scalar parse_product(TokenCursor& cur, const Ring& ring) {
    Scalar acc = parse_unary(cur, ring);
    while (true) {
        if (cur.accept('*')) {
            acc *= parse_unary(cur, ring);
        } else if (cur.accept('/')) {
            Scalar divisor = parse_unary(cur, ring);
            if (divisor.is_zero()) {
                throw ArithmeticError("division by zero in expression");
            }
            acc /= divisor;
        } else {
            return acc;
        }
    }
}

Scalar parse_sum(TokenCursor& cur, const Ring& ring) {
    Scalar acc = parse_product(cur, ring);
    while (true) {
        if (cur.accept('+')) {
            acc += parse_product(cur, ring);
        } else if (cur.accept('-')) {
            acc -= parse_product(cur, ring);
        } else {
            return acc;
        }
    }
}

} // namespace

Scalar parse_scalar_expression(TokenCursor& cursor, const Ring& ring) {
    return parse_sum(cursor, ring);
}

Scalar parse_scalar(std::string_view text, const Ring& ring) {
    TokenCursor cur(text, tokenize(text));
    if (cur.at_end()) {
        cur.fail("empty expression");
    }
    Scalar value = parse_sum(cur, ring);
    if (!cur.at_end()) {
        cur.fail("trailing input");
    }
    return value;
}

std::vector<std::int64_t> parse_integer_tuple(TokenCursor& cur) {
    std::vector<std::int64_t> out;
    cur.expect('[');
    if (cur.accept(']')) {
        return out;
    }
    do {
        bool negative = false;
        if (cur.accept('-')) {
            negative = true;
        } else {
            cur.accept('+');
        }
        if (cur.peek().kind != TokenKind::number) {
            cur.fail("expected an integer coordinate");
        }
        const std::int64_t v = std::stoll(cur.next().text);
        out.push_back(negative ? -v : v);
    } while (cur.accept(','));
    cur.expect(']');
    return out;
}

} // namespace virg
