#pragma once

#include "reserve3d/grid.hpp"
#include "reserve3d/params.hpp"
#include "reserve3d/simulation.hpp"

#include <optional>
#include <vector>

namespace reserve3d {

// Moment estimators on a fully observed world (untruncated tensors). Each
// estimator reads only the tensor it needs, so estimates do not feed into one another.

// lambda_j = sum_i N(i, j, 0) / sum_{i, j} N(i, j, 0).
std::vector<double> estimate_lag_probs(const Grid3<Count>& active);
// eta_k = sum_{i, j} N(i, j, k) / sum_{i, j} N(i, j, 0); eta_0 = 1.
std::vector<double> estimate_survival(const Grid3<Count>& active);
// p_k = sum_{i, j} nu(i, j, k) / sum_{i, j} N(i, j, k); absent where no claim is active.
std::vector<std::optional<double>> estimate_pay_prob(const Grid3<Count>& active, const Grid3<Count>& pay_counts);
// N_i = sum_j N(i, j, 0), the single-world maximum-likelihood estimate of the Poisson mean.
std::vector<double> estimate_expected_counts(const Grid3<Count>& active);

struct SeverityEstimate {
    Grid2<std::optional<double>> mean;
    Grid2<std::optional<double>> variance;  // (n-1) denominator; absent below two payments
    Grid2<std::size_t> payments;            // number of payments observed per (j, k)
};

// Pooled over occurrence years. Requires retained individual payments.
SeverityEstimate estimate_severity(const SimulationPath& path);

// Pooled Var/EW ratio: sum (n-1) s^2 over sum (n-1) mean across cells with a variance.
// Absent when no cell has two payments.
std::optional<double> estimate_dispersion(const SeverityEstimate& severity);

std::vector<double> estimate_lag_probs(const SimulationPath& path);
std::vector<double> estimate_survival(const SimulationPath& path);
std::vector<std::optional<double>> estimate_pay_prob(const SimulationPath& path);

// Full parameter set estimated from a path. Absent p, EW and Var cells take the
// value from `fallback`, which must share the path's dimensions.
ModelParams calibrate_params(const SimulationPath& path, const ModelParams& fallback);

} // namespace reserve3d
