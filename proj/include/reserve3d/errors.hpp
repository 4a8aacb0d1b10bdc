#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace reserve3d {

// Invalid distribution or model parameter.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter set failing validation. Carries every violated constraint.
class ValidationError : public ParameterError {
public:
    explicit ValidationError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

// An estimator could not be evaluated on the given data.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation called on an object in an unusable state (e.g. empty sample).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Config file problems; each message is prefixed with the offending key path.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

} // namespace reserve3d
