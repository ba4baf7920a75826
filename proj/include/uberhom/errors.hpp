#pragma once

#include <stdexcept>
#include <string>

namespace uberhom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad ids, duplicate vertices, unparsable JSON.
class InputError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a configured size guard.
class SizeGuardExceeded : public Error {
public:
    SizeGuardExceeded(std::size_t size, std::size_t limit)
        : Error("size guard exceeded: " + std::to_string(size) + " vertices, limit is " +
                std::to_string(limit)),
          size_(size), limit_(limit) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t size_;
    std::size_t limit_;
};

/// The anti-star cover is undefined for a full simplex.
class StandardSimplexError : public Error {
public:
    StandardSimplexError() : Error("complex is a standard simplex; anti-star cover degenerates") {}
};

class NotConnectedError : public Error {
public:
    NotConnectedError() : Error("complex or graph is not connected") {}
};

/// A linear system had no solution where the caller's preconditions guarantee one.
class SolveFailure : public Error {
public:
    using Error::Error;
};

/// Zig-zag lifting failed in the spectral sequence; signals an internal inconsistency.
class LiftFailure : public Error {
public:
    using Error::Error;
};

class CoverError : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    RingMismatch() : Error("coefficient rings of the operands differ") {}
};

}  // namespace uberhom
