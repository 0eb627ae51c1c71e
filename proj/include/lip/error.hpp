#pragma once

#include <stdexcept>
#include <string>

namespace lip {

// Root of every error the library raises on bad input. Internal invariant
// failures use std::logic_error instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text: set expressions, point lists, integers, JSON specs.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position = npos)
        : Error(what), position_(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class InvalidSample : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of an operation (x = 0 for the factorial
// threshold, odd x for x^2/2, non-consecutive samples, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured cap (series terms, search bound, normal-form modulus) was hit.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace lip
