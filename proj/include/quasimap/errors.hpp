#pragma once

#include <stdexcept>
#include <string>

namespace qm {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial division that was assumed exact left a remainder. This always
// indicates a violated anti-invariance assumption upstream, never a condition
// to be approximated away.
struct NotDivisibleError : Error {
    explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

// A coefficient outside a series' validity window was requested.
struct WindowTooNarrowError : Error {
    explicit WindowTooNarrowError(const std::string& what) : Error(what) {}
};

struct NotAnAnticoneError : Error {
    explicit NotAnAnticoneError(const std::string& what) : Error(what) {}
};

struct LimitFailsError : Error {
    explicit LimitFailsError(const std::string& what) : Error(what) {}
};

struct NTooSmallError : Error {
    explicit NTooSmallError(const std::string& what) : Error(what) {}
};

struct NotWeylInvariantError : Error {
    explicit NotWeylInvariantError(const std::string& what) : Error(what) {}
};

struct NotExtendedError : Error {
    explicit NotExtendedError(const std::string& what) : Error(what) {}
};

struct MissingCIDataError : Error {
    explicit MissingCIDataError(const std::string& what) : Error(what) {}
};

struct UnboundedBoxError : Error {
    explicit UnboundedBoxError(const std::string& what) : Error(what) {}
};

// Configuration file errors carry the offending key (and line where known).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace qm
