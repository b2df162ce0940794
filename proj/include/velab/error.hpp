/// @file error.hpp
/// @brief Exception hierarchy. ValidationError maps to CLI exit code 2,
/// RuntimeFailure (and subclasses) to exit code 3.
#pragma once

#include <stdexcept>
#include <string>

namespace velab {

/// Bad input: precondition violations, config errors, malformed files.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Failure during a computation that received valid input.
class RuntimeFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state left the small-perturbation regime (rho <= 0 or 1+f4 <= 0).
class RegimeError : public RuntimeFailure {
public:
    RegimeError(const std::string& what, double time, std::string field)
        : RuntimeFailure(what), time_(time), field_(std::move(field)) {}
    double time() const noexcept { return time_; }
    const std::string& field() const noexcept { return field_; }

private:
    double time_;
    std::string field_;
};

/// Non-finite values or CFL violation during time stepping.
class StabilityError : public RuntimeFailure {
public:
    StabilityError(const std::string& what, double time, std::string field, int stage = -1)
        : RuntimeFailure(what), time_(time), field_(std::move(field)), stage_(stage) {}
    double time() const noexcept { return time_; }
    const std::string& field() const noexcept { return field_; }
    int stage() const noexcept { return stage_; }

private:
    double time_;
    std::string field_;
    int stage_;
};

class IoError : public RuntimeFailure {
public:
    using RuntimeFailure::RuntimeFailure;
};

}  // namespace velab
