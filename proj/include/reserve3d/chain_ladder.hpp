#pragma once

#include "reserve3d/grid.hpp"
#include "reserve3d/params.hpp"
#include "reserve3d/triangle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reserve3d {

struct ChainLadderResult {
    std::vector<double> development_factors;  // f_n links development n to n + 1
    Grid2<double> completed;                  // cumulative, horizon x horizon
    std::vector<double> reserve_per_row;
    double total_reserve = 0.0;
};

// Volume-weighted Chain-Ladder on a cumulative triangle:
//   f_n = sum_m C(m, n+1) / sum_m C(m, n)   over rows where both cells are known,
// future cells completed by C(m, n+1) = C(m, n) f_n. Throws EstimationError when a
// needed denominator is zero.
ChainLadderResult chain_ladder(const Triangle& cumulative);

enum class Estimator { analytic_total, analytic_reported, chain_ladder_occurrence, chain_ladder_reporting };

std::string_view to_string(Estimator e);
// Reserve quantity an estimator is compared against.
std::string_view target_of(Estimator e);

struct ComparisonRow {
    std::size_t replicate;
    Estimator estimator;
    std::optional<double> estimate;  // empty when the estimator failed on this replicate
    double truth;
    std::string error;
};

struct EstimatorSummary {
    Estimator estimator;
    std::size_t succeeded = 0;
    std::size_t failed = 0;
    double bias = 0.0;  // mean(estimate - truth) over successful replicates
    double rmse = 0.0;
    double mean_truth = 0.0;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;  // ordered by (replicate, estimator)
    std::vector<EstimatorSummary> summary;
};

// Simulates `replicates` worlds and scores each estimator against the simulated
// future payments: the analytic 3D means, Chain-Ladder on the occurrence triangle
// (target: total reserve) and on the reporting triangle (target: reported-claims
// reserve, since the reporting triangle has no rows for unreported claims).
ComparisonTable compare_2d_3d(const ModelParams& params, std::size_t replicates, std::uint64_t master_seed,
                              unsigned workers = 0);

} // namespace reserve3d
