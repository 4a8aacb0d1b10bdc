#pragma once

#include "reserve3d/monte_carlo.hpp"
#include "reserve3d/params.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reserve3d {

struct GrowthRule {
    double base;
    double growth;
    bool operator==(const GrowthRule&) const = default;
};

struct RunConfig {
    ModelParams params;
    // Compact forms the config was written in; kept so files round-trip in the same shape.
    std::optional<GrowthRule> counts_rule;
    std::optional<double> severity_dispersion;  // severity_var = dispersion * severity_mean

    std::size_t replicates = 0;
    std::uint64_t master_seed = 0;
    std::vector<Statistic> statistics;
    std::vector<double> quantile_levels;
    std::string output_dir = "out";
    unsigned workers = 0;

    bool operator==(const RunConfig&) const = default;
};

// Command-line values that replace the corresponding config entries before validation.
struct ConfigOverrides {
    std::optional<std::uint64_t> master_seed;
    std::optional<std::size_t> replicates;
    std::optional<std::string> output_dir;
    std::optional<unsigned> workers;
};

// Parses and validates a JSON config. Every problem is reported with its key
// path ("model.lag_probs", "run.master_seed", ...) in one ConfigError.
RunConfig parse_config_text(std::string_view text, const ConfigOverrides& overrides = {});
RunConfig load_config(const std::filesystem::path& path, const ConfigOverrides& overrides = {});

std::string config_to_text(const RunConfig& config);
void write_config(const std::filesystem::path& path, const RunConfig& config);

// Built-in experiment: representative curves, base 150, growth 3%, 15 years, 1000 replicates.
RunConfig default_config();

} // namespace reserve3d
