#pragma once

#include <stdexcept>
#include <string>

namespace loday {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live on planes of different half-dimension.
struct DimensionError : Error {
    using Error::Error;
};

/// A basis or variable index is out of range.
struct IndexError : Error {
    using Error::Error;
};

/// An object does not have the polynomial degree an operation requires.
struct DegreeError : Error {
    using Error::Error;
};

/// A cochain operation would exceed the configured arity cap, or a
/// multivector/form operation would leave the implemented degree range.
struct ArityError : Error {
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// An exponential series did not terminate within the allowed order.
struct NilpotencyError : Error {
    using Error::Error;
};

/// A bracket is not representable as a vector field (inverse of psi fails).
struct NotRepresentableError : Error {
    using Error::Error;
};

/// Malformed textual input (rational strings, JSON schemas).
struct ParseError : Error {
    using Error::Error;
};

} // namespace loday
