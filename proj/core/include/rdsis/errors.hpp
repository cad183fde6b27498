#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdsis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (v < 0, x <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Root search could not bracket or converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Integration produced NaN or left any reasonable bound.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, double t) : Error(what), time_(t) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

/// Grid too small, mismatched grids, or an unusable time step.
class GridError : public Error {
public:
    using Error::Error;
};

/// A closed form was requested for an incidence family that has none.
class UnsupportedFamilyError : public Error {
public:
    using Error::Error;
};

/// A Lyapunov functional with logarithms was evaluated at u <= 0 or v <= 0.
class NonPositiveStateError : public Error {
public:
    NonPositiveStateError(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Configuration could not be parsed or failed validation.
///
/// `violations()` lists every problem found; `what()` names the first one.
class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<std::string> violations)
        : Error(violations.empty() ? std::string("invalid configuration") : violations.front()),
          violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace rdsis
