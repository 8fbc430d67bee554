#pragma once

#include "aosrm/decl.hpp"
#include "aosrm/token.hpp"

#include <set>
#include <span>
#include <string>
#include <vector>

namespace aosrm {

/// Declaration-level parse of one file's token stream. Recognizes package and
/// import headers, (nested) class/interface/aspect declarations with their
/// extends/implements clauses, methods (constructors become "<init>"),
/// fields, pointcuts and advice. Statement bodies are skipped by balanced
/// brace matching; advice bodies are shallow-scanned for self-calls.
/// Unrecognized member constructs are skipped with a warning.
///
/// Throws Error{ParseFailure} only for structurally unrecoverable input
/// (unbalanced braces at end of file).
SourceUnit parse_unit(const std::vector<Token>& tokens, const SourceFile& file,
                      std::vector<std::string>& warnings);

/// Names in call position inside an advice body: every identifier directly
/// followed by '(' whose receiver is absent or `this`, excluding `new`
/// expressions. Only such self-calls can bind to overriding methods in the
/// aspect hierarchy.
std::set<std::string> extract_advice_calls(std::span<const Token> body_tokens);

/// Canonical structural dump, used by tests to compare parses irrespective
/// of comments and whitespace in the source.
std::string dump_unit(const SourceUnit& unit);

} // namespace aosrm
