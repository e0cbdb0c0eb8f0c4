#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reltype {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the expression / ring-spec parsers; `position` is a 0-based
// byte offset into the input string.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct RingMismatchError : Error {
    RingMismatchError() : Error("operands live in different rings") {}
    explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace reltype
