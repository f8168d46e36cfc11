#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcdual {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition on an argument (wrong variables, zero polynomial, bad degree).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Raised by the polynomial parser. `offset` is the 1-based byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// The elimination produced nothing usable (reducible input, common factor of partials).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// A tangent of slope 1 has no finite image in parallel coordinates.
class IdealPoint : public Error {
public:
    using Error::Error;
};

class NoVerifiableSamples : public Error {
public:
    using Error::Error;
};

}  // namespace pcdual
