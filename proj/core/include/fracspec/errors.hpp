#pragma once

#include <stdexcept>
#include <string>

namespace fracspec {

// Invalid-usage errors (bad parameters, malformed input, mismatched grids).
// The CLI maps these to exit code 2.
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GridMismatchError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class InvalidOrderError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class DomainTooSmallError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

class ParseError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

// Numerical failures detected at run time (ill-conditioned or inconsistent
// data rather than bad usage). The CLI maps these to exit code 1.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inverse transform produced a significant imaginary part: the spectrum does
// not represent a real function (aliasing, corrupt data, asymmetric edits).
class SymmetryViolationError : public NumericError {
public:
    using NumericError::NumericError;
};

// Zero-frequency bin carries mass where an inverse multiplier is singular.
class NonzeroMeanError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace fracspec
