#pragma once

#include <stdexcept>
#include <string>

namespace pyrosim {

/// Invalid specification or configuration input.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested time step violates a stability guard.
class StepSizeError : public std::runtime_error {
public:
    explicit StepSizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Curve fit or parameter inference could not be completed.
class FitError : public std::runtime_error {
public:
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

/// Inconsistent time-series history handed to an audit.
class TraceError : public std::runtime_error {
public:
    explicit TraceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pyrosim
