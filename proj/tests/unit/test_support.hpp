#pragma once

#include "reserve3d/params.hpp"
#include "reserve3d/random.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace reserve3d::testing {

// Small parameter set with constant severities per cell.
inline ModelParams small_params(std::vector<double> counts, std::vector<double> lags, std::vector<double> survival,
                                std::vector<double> pay, double mean = 10.0, double var = 40.0) {
    ModelParams p;
    p.occurrence_years = counts.size();
    p.max_lag = lags.size();
    p.max_runoff = survival.size() - 1;
    p.expected_counts = std::move(counts);
    p.lag_probs = std::move(lags);
    p.survival = std::move(survival);
    p.pay_prob = std::move(pay);
    p.severity_mean = Grid2<double>(p.max_lag, p.runoff_count(), mean);
    p.severity_var = Grid2<double>(p.max_lag, p.runoff_count(), var);
    return p;
}

// Random valid parameter set within the given horizons, drawn from a test-local engine.
inline ModelParams random_params(std::mt19937_64& rng, std::size_t years, std::size_t lags, std::size_t max_runoff,
                                 double count_scale = 20.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ModelParams p;
    p.occurrence_years = years;
    p.max_lag = lags;
    p.max_runoff = max_runoff;
    for (std::size_t i = 0; i < years; ++i) p.expected_counts.push_back(count_scale * (0.2 + u(rng)));
    double total = 0.0;
    for (std::size_t j = 0; j < lags; ++j) {
        p.lag_probs.push_back(u(rng) < 0.2 ? 0.0 : u(rng));
        total += p.lag_probs.back();
    }
    if (total == 0.0) {
        p.lag_probs[0] = 1.0;
        total = 1.0;
    }
    for (auto& l : p.lag_probs) l /= total;
    p.survival.push_back(1.0);
    for (std::size_t k = 1; k <= max_runoff; ++k) p.survival.push_back(p.survival.back() * u(rng));
    for (std::size_t k = 0; k <= max_runoff; ++k) p.pay_prob.push_back(u(rng));
    p.severity_mean = Grid2<double>(lags, max_runoff + 1);
    p.severity_var = Grid2<double>(lags, max_runoff + 1);
    for (std::size_t j = 0; j < lags; ++j)
        for (std::size_t k = 0; k <= max_runoff; ++k) {
            p.severity_mean(j, k) = 1.0 + 20.0 * u(rng);
            p.severity_var(j, k) = 4.0 * p.severity_mean(j, k) * u(rng);
        }
    return p;
}

struct SampleMoments {
    double mean;
    double variance;  // (n-1) denominator
    double std_error() const { return std::sqrt(variance); }
};

inline SampleMoments sample_moments(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, ss / static_cast<double>(xs.size() - 1)};
}

// Standard error of the sample variance, from the sample fourth central moment:
// Var(s^2) ~ (m4 - s^4 (n - 3) / (n - 1)) / n.
inline double variance_std_error(const std::vector<double>& xs) {
    const auto m = sample_moments(xs);
    double m4 = 0.0;
    for (double x : xs) m4 += std::pow(x - m.mean, 4);
    const double n = static_cast<double>(xs.size());
    m4 /= n;
    return std::sqrt(std::max(0.0, m4 - m.variance * m.variance * (n - 3.0) / (n - 1.0)) / n);
}

} // namespace reserve3d::testing
