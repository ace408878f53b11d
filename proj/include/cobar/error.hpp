#pragma once

#include <stdexcept>
#include <string>

namespace cobar {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured computation budget was exceeded (Groebner/syzygy engine).
// Signals an intractable presentation, never silent truncation.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// The requested operation is not supported for this algebroid
// (e.g. it needs a free-finite A1 and the declaration is weaker).
struct CapabilityError : Error {
    explicit CapabilityError(const std::string& msg) : Error(msg) {}
};

// An internal consistency assumption failed, typically because a user
// declaration (such as flatness) is false.
struct IntegrityError : Error {
    explicit IntegrityError(const std::string& msg) : Error(msg) {}
};

// Malformed definition-file input.
struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_no(line) {}
    int line_no;
};

// Invalid arguments at API level (mismatched rings, wrong shapes, ...).
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

}  // namespace cobar
