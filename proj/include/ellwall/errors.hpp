#pragma once

#include <stdexcept>
#include <string>

namespace ellwall {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 3; }
};

/// Malformed input: bad JSON, bad rational literal, wrong vector length.
class InputError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 1; }
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

/// A documented precondition does not hold.
class DomainError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

class NotInHeartError : public DomainError {
public:
    using DomainError::DomainError;
};

class NonGenericError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An internal consistency check failed; always a bug.
class InvariantError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

}  // namespace ellwall
