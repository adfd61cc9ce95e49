#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reconf {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structural precondition of an input was violated.
class ValidationError : public Error {
public:
    using Error::Error;
};

class RuleApplicationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A Turing machine broke end-marker discipline or is otherwise malformed.
class MachineError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EncodingError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConstructionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DecodeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A search or enumeration hit a configured cap. Never means "unreachable".
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, const std::string& message)
        : ValidationError("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace reconf
