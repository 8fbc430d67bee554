#pragma once

#include <stdexcept>
#include <string>

namespace aosrm {

enum class ErrorKind {
    RootNotFound,
    IoFailure,
    UnterminatedLiteral,
    UnterminatedComment,
    ParseFailure,
    UnknownType,
    InvalidTally,
};

/// Fatal conditions only; recoverable irregularities travel as warnings or
/// Violation records instead.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::RootNotFound: return "RootNotFound";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::UnterminatedLiteral: return "UnterminatedLiteral";
    case ErrorKind::UnterminatedComment: return "UnterminatedComment";
    case ErrorKind::ParseFailure: return "ParseFailure";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::InvalidTally: return "InvalidTally";
    }
    return "Error";
}

} // namespace aosrm
