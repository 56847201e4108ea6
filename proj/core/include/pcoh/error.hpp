#pragma once

#include <stdexcept>
#include <string>

namespace pcoh {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed external data (files, dimensions, mismatched moduli).
class InputError : public Error {
public:
    using Error::Error;
};

/// A precondition on the mathematical domain was violated
/// (e.g. an operation that needs a p-group got something else).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured resource ceiling was exceeded (rank ceiling, degree cap,
/// group-order cap).  Always recoverable by raising the cap.
class CapError : public Error {
public:
    using Error::Error;
};

/// A stored claim failed re-verification.
class VerifyError : public Error {
public:
    using Error::Error;
};

/// A condition that is impossible when the library's own invariants hold.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace pcoh
