#include "reserve3d/errors.hpp"

#include <utility>

namespace reserve3d {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
    std::string out;
    for (const auto& issue : issues) {
        if (!out.empty()) out += "; ";
        out += issue;
    }
    return out;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : ParameterError("invalid model parameters: " + join_issues(issues)), issues_(std::move(issues)) {}

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error("invalid config: " + join_issues(issues)), issues_(std::move(issues)) {}

} // namespace reserve3d
