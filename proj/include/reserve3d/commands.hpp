#pragma once

#include "reserve3d/config.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace reserve3d {

// File names written by the commands below.
inline constexpr const char* kSummaryFile = "summary.json";
inline constexpr const char* kConfigEchoFile = "config.json";
inline constexpr const char* kTriangleOccurrenceFile = "triangle_occurrence.csv";
inline constexpr const char* kTriangleReportingFile = "triangle_reporting.csv";
inline constexpr const char* kMeanClaimSizeFile = "mean_claim_size.csv";
inline constexpr const char* kSamplePathFile = "sample_path.csv";
inline constexpr const char* kSampleSeveritiesFile = "sample_severities.csv";
inline constexpr const char* kComparisonFile = "comparison.csv";
inline constexpr const char* kComparisonSummaryFile = "comparison_summary.csv";

std::string distribution_file_name(Statistic s);

// Runs the Monte Carlo experiment and writes the summary, one distribution CSV
// per statistic, and the triangles, mean claim sizes and full tensors of replicate 0.
// Every file is a function of (config, seed) only; the worker count never shows.
void run_simulate(const RunConfig& config, const std::filesystem::path& out_dir);

// Estimates parameters from the replicate-0 world written by run_simulate and
// returns them as a config whose run section is copied from `base`.
RunConfig run_calibrate(const RunConfig& base, const std::filesystem::path& simulate_dir);

// Writes the per-replicate 2D/3D comparison and its per-estimator summary.
void run_compare(const RunConfig& config, const std::filesystem::path& out_dir);

// Human-readable summary of whatever simulate/compare outputs exist in `dir`.
std::string render_report(const std::filesystem::path& dir);

} // namespace reserve3d
