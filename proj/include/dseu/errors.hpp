#pragma once

#include <stdexcept>
#include <string>

namespace dseu {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed values, violated preconditions, unknown labels.
/// The CLI maps this family to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class LookupError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// An oracle answered in a way that breaks the query protocol (non-monotone
/// responses, no indifference point below the search ceiling). Exit code 2.
class ProtocolError : public Error {
public:
    using Error::Error;
};

}  // namespace dseu
