#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes disagree, or a size precondition failed.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument value failed (non-finite entry, p < 1, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed matrix file, config file, or command-line value.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Numerical failure: the computation could not deliver its contract.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// The eigensolver hit its sweep cap or missed the residual contract.
class IllConditioned : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Requested tolerance is below what double precision can certify.
class Unachievable : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace numrad
