#pragma once

#include "virg/scalar.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace virg {

enum class TokenKind { number, identifier, symbol, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    std::size_t offset = 0;
};

// Splits polynomial / algebra-element text into numbers, identifiers and the
// single-character symbols + - * / ^ ( ) [ ] ,
std::vector<Token> tokenize(std::string_view text);

// Cursor over a token stream shared by the scalar and algebra-element parsers.
class TokenCursor {
public:
    TokenCursor(std::string_view source, std::vector<Token> tokens)
        : source_(source), tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool accept(char symbol);
    void expect(char symbol);
    bool at_end() const { return peek().kind == TokenKind::end; }
    [[noreturn]] void fail(const std::string& message) const;

private:
    std::string_view source_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Parses the canonical rendering syntax (and ordinary infix input) into a
// Scalar: rationals, ring symbols, + - * / ^ with non-negative integer powers.
// Throws ParseError on malformed input or unknown symbols.
Scalar parse_scalar(std::string_view text, const Ring& ring);

// Expression-level entry point for embedding in other parsers.
Scalar parse_scalar_expression(TokenCursor& cursor, const Ring& ring);

// "[2,-3]" style integer tuple.
std::vector<std::int64_t> parse_integer_tuple(TokenCursor& cursor);

} // namespace virg
