#pragma once

#include <stdexcept>
#include <string>

namespace so3 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonDivisible : Error { using Error::Error; };
struct NonCoprime : Error { using Error::Error; };
struct NonIntegral : Error { using Error::Error; };
struct PoleHit : Error { using Error::Error; };
struct UnresolvedLimit : Error { using Error::Error; };
struct TruncationTooSmall : Error { using Error::Error; };
struct NotQHS : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct Inconsistent : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : Error(msg + " at position " + std::to_string(p)), pos(p) {}
};

}  // namespace so3
