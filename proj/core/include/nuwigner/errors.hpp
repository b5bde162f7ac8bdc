#pragma once

#include <stdexcept>
#include <string>

namespace nuwigner {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidDimension : public Error {
public:
    using Error::Error;
};

class InvalidSpin : public Error {
public:
    using Error::Error;
};

class DimensionTooSmall : public Error {
public:
    using Error::Error;
};

/// Raised when a block that should be invariant under an operator is not.
class NonInvariantSubspace : public Error {
public:
    using Error::Error;
};

class NegativeRadicand : public Error {
public:
    NegativeRadicand(const std::string& what, double value) : Error(what), value_(value) {}
    double value() const noexcept { return value_; }

private:
    double value_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace nuwigner
