#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cohomo {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression source. Positions are 1-based character offsets;
/// a position one past the last character means "end of input".
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t position, std::vector<std::string> expected = {});

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

/// Identifier in an expression that is neither `s`, a constant nor a known function.
class UnknownIdentifierError : public ParseError {
public:
    UnknownIdentifierError(const std::string& name, std::size_t position);
};

/// Function evaluated outside its real domain, or produced a non-finite value.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Iteration cap, bracket expansion or quadrature failures.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Caller-side precondition violated (bad window, bad grid, bad order, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A tolerance function took a negative value.
class InvalidTolerance : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// The requested evaluation mode is not offered by a function (e.g. jets of an orbit sum).
class UnsupportedCapability : public Error {
public:
    using Error::Error;
};

/// A sampled assumption check failed (map conditions, periodicity spot-check).
class AssumptionViolation : public Error {
public:
    using Error::Error;
};

} // namespace cohomo
