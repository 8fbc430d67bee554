#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aosrm {

enum class TokenKind {
    Identifier,
    Keyword,
    Punctuation,
    StringLiteral,
    CharLiteral,
    Number,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    int line = 1;
    int column = 1;

    bool is(TokenKind k) const { return kind == k; }
    bool is_punct(std::string_view s) const {
        return kind == TokenKind::Punctuation && text == s;
    }
    bool is_word(std::string_view s) const {
        return (kind == TokenKind::Identifier || kind == TokenKind::Keyword) && text == s;
    }
};

/// Splits source text into tokens. Comments and whitespace are dropped;
/// string/char literals keep their delimiters and escapes verbatim. Java
/// reserved words come out as Keyword; AspectJ words (aspect, pointcut,
/// before, after, around, declare) stay Identifier and are recognized by the
/// parser in context. A UTF-8 BOM is stripped. The result always ends with
/// one End token.
///
/// Throws Error{UnterminatedLiteral|UnterminatedComment} with the line number.
std::vector<Token> tokenize(std::string_view text);

bool is_java_keyword(std::string_view word);

} // namespace aosrm
