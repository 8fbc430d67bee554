#include "aosrm/token.hpp"

#include "aosrm/error.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace aosrm {

namespace {

const std::unordered_set<std::string_view> kJavaKeywords = {
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
    "class", "const", "continue", "default", "do", "double", "else", "enum",
    "extends", "final", "finally", "float", "for", "goto", "if", "implements",
    "import", "instanceof", "int", "interface", "long", "native", "new",
    "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
    "transient", "try", "void", "volatile", "while",
};

// Multi-char operators worth keeping as single tokens. << >> stay split so
// nested generic closers (List<List<T>>) still count as two '>'.
constexpr std::array<std::string_view, 11> kMultiPunct = {
    "...", "&&", "||", "::", "->", "==", "!=", "<=", ">=", "++", "--",
};

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {
        if (text_.size() >= 3 && static_cast<unsigned char>(text_[0]) == 0xEF &&
            static_cast<unsigned char>(text_[1]) == 0xBB &&
            static_cast<unsigned char>(text_[2]) == 0xBF) {
            pos_ = 3;
        }
    }

    bool done() const { return pos_ >= text_.size(); }
    char peek(size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    int line() const { return line_; }
    int column() const { return column_; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    bool starts_with(std::string_view s) const {
        return text_.compare(pos_, s.size(), s) == 0;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

} // namespace

bool is_java_keyword(std::string_view word) {
    return kJavaKeywords.count(word) != 0;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    Cursor cur(text);

    auto push = [&](TokenKind kind, std::string tok_text, int line, int col) {
        out.push_back(Token{kind, std::move(tok_text), line, col});
    };

    while (!cur.done()) {
        char c = cur.peek();
        if (std::isspace(static_cast<unsigned char>(c))) {
            cur.advance();
            continue;
        }
        // Line comment.
        if (c == '/' && cur.peek(1) == '/') {
            while (!cur.done() && cur.peek() != '\n') cur.advance();
            continue;
        }
        // Block comment.
        if (c == '/' && cur.peek(1) == '*') {
            int start_line = cur.line();
            cur.advance();
            cur.advance();
            bool closed = false;
            while (!cur.done()) {
                if (cur.peek() == '*' && cur.peek(1) == '/') {
                    cur.advance();
                    cur.advance();
                    closed = true;
                    break;
                }
                cur.advance();
            }
            if (!closed) {
                throw Error(ErrorKind::UnterminatedComment,
                            "unterminated block comment starting at line " +
                                std::to_string(start_line));
            }
            continue;
        }
        int line = cur.line();
        int col = cur.column();
        // String / char literal; delimiters and escapes kept in the text.
        if (c == '"' || c == '\'') {
            char quote = c;
            std::string lit;
            lit.push_back(cur.advance());
            bool closed = false;
            while (!cur.done()) {
                char d = cur.peek();
                if (d == '\n') break;
                lit.push_back(cur.advance());
                if (d == '\\') {
                    if (cur.done()) break;
                    lit.push_back(cur.advance());
                    continue;
                }
                if (d == quote) {
                    closed = true;
                    break;
                }
            }
            if (!closed) {
                throw Error(ErrorKind::UnterminatedLiteral,
                            std::string("unterminated ") +
                                (quote == '"' ? "string" : "char") +
                                " literal at line " + std::to_string(line));
            }
            push(quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral,
                 std::move(lit), line, col);
            continue;
        }
        if (is_ident_start(static_cast<unsigned char>(c))) {
            std::string word;
            while (!cur.done() && is_ident_part(static_cast<unsigned char>(cur.peek()))) {
                word.push_back(cur.advance());
            }
            TokenKind kind =
                is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
            push(kind, std::move(word), line, col);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            num.push_back(cur.advance());
            while (!cur.done()) {
                char d = cur.peek();
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
                    num.push_back(cur.advance());
                    continue;
                }
                // Exponent sign: 1e-3, 2E+5.
                if ((d == '+' || d == '-') && !num.empty() &&
                    (num.back() == 'e' || num.back() == 'E') &&
                    std::isdigit(static_cast<unsigned char>(cur.peek(1)))) {
                    num.push_back(cur.advance());
                    continue;
                }
                break;
            }
            push(TokenKind::Number, std::move(num), line, col);
            continue;
        }
        // Punctuation; try the multi-char operators first.
        bool matched = false;
        for (std::string_view op : kMultiPunct) {
            if (cur.starts_with(op)) {
                for (size_t i = 0; i < op.size(); ++i) cur.advance();
                push(TokenKind::Punctuation, std::string(op), line, col);
                matched = true;
                break;
            }
        }
        if (matched) continue;
        push(TokenKind::Punctuation, std::string(1, cur.advance()), line, col);
    }

    out.push_back(Token{TokenKind::End, "", cur.line(), cur.column()});
    return out;
}

} // namespace aosrm
