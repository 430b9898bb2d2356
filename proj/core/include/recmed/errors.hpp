#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recmed {

// Base class for all library errors so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Logistic MLE diverged (complete/quasi-complete separation or singular Hessian).
class SeparationError : public Error {
public:
    using Error::Error;
};

class RankDeficientError : public Error {
public:
    using Error::Error;
};

// Residual sum of squares is exactly zero; the Gaussian density is degenerate.
class DegenerateVarianceError : public Error {
public:
    using Error::Error;
};

class NoEventsError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, std::vector<double> last_estimate,
                     double gradient_norm)
        : Error(msg), last_estimate(std::move(last_estimate)), gradient_norm(gradient_norm) {}
    std::vector<double> last_estimate;
    double gradient_norm;
};

class RiskSetEmptyError : public Error {
public:
    using Error::Error;
};

class EmptyRiskArmError : public Error {
public:
    using Error::Error;
};

class TooManyFailuresError : public Error {
public:
    using Error::Error;
};

class UnsupportedScenarioError : public Error {
public:
    using Error::Error;
};

// I/O and configuration errors (row/column context goes in the message).
class ParseError : public Error {
public:
    using Error::Error;
};

class OrphanEventError : public Error {
public:
    using Error::Error;
};

class MissingColumnError : public Error {
public:
    using Error::Error;
};

class NonFiniteValueError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace recmed
