#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Operands live in different coefficient rings (e.g. Z[z]/(z^4-1) vs Z[z]/(z^5-1)).
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// Access or comparison outside the window where coefficients are known.
class WindowError : public Error {
public:
    using Error::Error;
};

/// The lowest-order coefficient of a series is not invertible in its ring.
class NotUnitError : public Error {
public:
    using Error::Error;
};

/// Arguments outside an operation's documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace qseries
