#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

// Invalid arguments, out-of-domain parameters, malformed input files.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

// A pair distance sits within tolerance of r1 or r2 and strict boundaries are on.
class BoundaryAmbiguity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance too large for an exact solver or enumerator.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructed witness failed its own post-hoc check.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace annulus
