#pragma once

#include <stdexcept>
#include <string>

namespace weylsheaf {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input: type specs, label strings, group specs, index lists.
class InputError : public Error {
public:
    using Error::Error;
};

// A brute-force computation would exceed its configured size cap.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

// sigma / relative group requested for a J whose cuspidal set is empty.
class CuspidalityViolation : public Error {
public:
    using Error::Error;
};

class InvolutionFailure : public Error {
public:
    using Error::Error;
};

// The two routes to a Coxeter matrix entry disagree.
class MatrixMismatch : public Error {
public:
    using Error::Error;
};

class UnknownDiagram : public Error {
public:
    using Error::Error;
};

class DegenerateFormula : public Error {
public:
    using Error::Error;
};

class LabelNotCuspidal : public InputError {
public:
    using InputError::InputError;
};

} // namespace weylsheaf
