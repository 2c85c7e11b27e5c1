#pragma once

#include <stdexcept>
#include <string>

#include "nhlc/report.hpp"

namespace nhlc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class InvertibilityError : public Error {
public:
    using Error::Error;
};

/// A theorem's hypothesis (perfect, centerless, ...) does not hold for the input.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A map space is not closed under the bracket or twist inside the computed k-range.
class TruncationError : public Error {
public:
    using Error::Error;
};

class DecompositionError : public Error {
public:
    using Error::Error;
};

/// Caller supplied data violating an operation's precondition.
class InputError : public Error {
public:
    using Error::Error;
};

/// Carries the failing report so callers can print every violation.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, ValidationReport report)
        : Error(what), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

}  // namespace nhlc
