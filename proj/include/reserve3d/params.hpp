#pragma once

#include "reserve3d/grid.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace reserve3d {

// Full parameter set of the three-dimensional claim model.
//
// Index conventions:
//   occurrence year i = 1..occurrence_years, stored at offset i-1;
//   reporting lag   j = 0..max_lag-1 (j = 0: reported in the occurrence year);
//   run-off year    k = 0..max_runoff (k = 0: the reporting year).
// A cell (i, j, k) is known at the valuation date iff i + j + k <= occurrence_years.
struct ModelParams {
    std::size_t occurrence_years = 0;
    std::size_t max_lag = 0;     // number of lag values J
    std::size_t max_runoff = 0;  // K; run-off years 0..K

    std::vector<double> expected_counts;  // size I, >= 0
    std::vector<double> lag_probs;        // size J, sums to 1
    std::vector<double> survival;         // size K+1, cumulative, survival[0] == 1, non-increasing
    std::vector<double> pay_prob;         // size K+1, in [0, 1]
    Grid2<double> severity_mean;          // J x (K+1), > 0
    Grid2<double> severity_var;           // J x (K+1), >= 0

    std::size_t runoff_count() const noexcept { return max_runoff + 1; }

    // Binomial probability of staying active from k-1 to k: survival[k] / survival[k-1], 0/0 := 0.
    double conditional_survival(std::size_t k) const;

    bool operator==(const ModelParams&) const = default;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;  // survival plateaus
    bool ok() const noexcept { return errors.empty(); }
};

// Checks every invariant and reports all violations, each naming field and index.
ValidationReport check_params(const ModelParams& params);

// Returns params unchanged when valid, otherwise throws ValidationError listing every issue.
const ModelParams& validate_params(const ModelParams& params);

// base * (1 + growth)^(i-1) for i = 1..years.
std::vector<double> make_expected_counts(double base, double growth, std::size_t years);

// Representative third-party-liability parameter set: base 150 claims, 3% growth,
// 15 occurrence years, severity variance = 4 x mean. The lag, survival, payment
// and severity curves are stylized shapes, not fitted values.
ModelParams default_params();

} // namespace reserve3d
