#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modseven {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by the expression parser; carries the byte offset of the problem.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

/// Raised when a certificate-style computation detects a failed identity.
struct CheckFailure : Error {
    using Error::Error;
};

}  // namespace modseven
