#pragma once

#include <stdexcept>
#include <string>

namespace flt {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

/// A hypothesis required by one of the bound formulas fails; the message
/// names the violated condition.
struct HypothesisError : Error {
    using Error::Error;
};

/// A weighted-regime exponent constraint fails; the message names the
/// offending inequality.
struct ConstraintError : Error {
    using Error::Error;
};

/// The defining integral is provably divergent.
struct DivergenceError : Error {
    using Error::Error;
};

/// Quadrature could not reach the requested tolerance.
struct ToleranceError : Error {
    ToleranceError(const std::string& what, double achieved)
        : Error(what), achieved_rel_error(achieved) {}
    double achieved_rel_error;
};

/// Input whose norm is zero or infinite where a finite nonzero one is required.
struct DegenerateInputError : Error {
    using Error::Error;
};

/// Scenario document is malformed or semantically invalid.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace flt
