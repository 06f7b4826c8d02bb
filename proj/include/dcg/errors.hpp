#pragma once

#include <stdexcept>
#include <string>

namespace dcg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParityError : Error {
    explicit ParityError(const std::string& msg) : Error(msg) {}
};

struct ZeroSpinorError : Error {
    explicit ZeroSpinorError(const std::string& msg) : Error(msg) {}
};

struct NotPureError : Error {
    explicit NotPureError(const std::string& msg) : Error(msg) {}
};

struct NotInDGError : Error {
    explicit NotInDGError(const std::string& msg) : Error(msg) {}
};

struct GradeError : Error {
    explicit GradeError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct OracleIntegrityError : Error {
    explicit OracleIntegrityError(const std::string& msg) : Error(msg) {}
};

struct CheckFailure : Error {
    explicit CheckFailure(const std::string& msg) : Error(msg) {}
};

// Syntax error in an expression; `pos` is a 0-based offset into the input.
struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

} // namespace dcg
