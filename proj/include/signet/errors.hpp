// errors.hpp
// Exception hierarchy shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace signet {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input that cannot be interpreted at all (bad CSV row, bad date).
class ParseError : public Error {
public:
    using Error::Error;
};

// Well-formed input that violates a domain invariant (non-positive price,
// duplicate key, non-monotone calendar).
class ValidationError : public Error {
public:
    using Error::Error;
};

// API misuse: arguments that the caller should have checked (mismatched
// window indices, invalid parameter combinations).
class UsageError : public Error {
public:
    using Error::Error;
};

// A statistical fit could not be produced: too few samples, singular
// design, or optimizer failure.
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace signet
