#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

/// Input outside an operation's domain (bad permutation text, pattern, pair, index).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A brute-force or truncation cap was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exactness invariant failed (inexact division, non-integral result).
/// Always an implementation or transcription bug, never user error.
class ExactnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Auxiliary degree of a truncated series coefficient exceeded its guard.
class GuardOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace permlab
