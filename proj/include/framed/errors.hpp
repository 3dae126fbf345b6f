#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace framed {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands have different ambient lengths.
class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t lhs, std::size_t rhs)
        : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// An enumeration or search would exceed its configured budget.
class ResourceExceeded : public Error {
public:
    explicit ResourceExceeded(const std::string& what, std::uint64_t explored = 0)
        : Error(what), explored_(explored) {}
    std::uint64_t explored() const noexcept { return explored_; }

private:
    std::uint64_t explored_;
};

/// Input violates an operation's documented precondition.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// Malformed code file, bit string or label.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Fusion of two modules whose 1/16-words are distinct and nonzero.
class UnsupportedFusion : public Error {
public:
    using Error::Error;
};

/// An identity that must hold by construction failed.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace framed
