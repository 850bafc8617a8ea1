#pragma once

#include <stdexcept>
#include <string>

namespace sw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// malformed input text or JSON shape
class ParseError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

// a structural invariant of the input does not hold
class ValidationError : public Error {
public:
    ValidationError(std::string kind, const std::string& detail)
        : Error(kind + ": " + detail), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class SingularError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace sw
