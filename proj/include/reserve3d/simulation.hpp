#pragma once

#include "reserve3d/grid.hpp"
#include "reserve3d/params.hpp"
#include "reserve3d/random.hpp"

#include <optional>
#include <span>
#include <vector>

namespace reserve3d {

// Active claim counts N and payment counts nu, both indexed (occurrence offset, lag, runoff).
struct ClaimTensor {
    Grid3<Count> active;
    Grid3<Count> payments;

    ClaimTensor() = default;
    ClaimTensor(std::size_t years, std::size_t lags, std::size_t runoffs)
        : active(years, lags, runoffs, 0), payments(years, lags, runoffs, 0) {}

    bool operator==(const ClaimTensor&) const = default;
};

// Aggregate paid amounts Z per cell.
struct PaymentTensor {
    Grid3<double> paid;

    PaymentTensor() = default;
    PaymentTensor(std::size_t years, std::size_t lags, std::size_t runoffs) : paid(years, lags, runoffs, 0.0) {}

    bool operator==(const PaymentTensor&) const = default;
};

// Individual payment amounts per cell in compressed-row form: the payments of
// cell c are amounts[offsets[c] .. offsets[c+1]).
struct RetainedSeverities {
    std::vector<double> amounts;
    std::vector<std::size_t> offsets;

    bool operator==(const RetainedSeverities&) const = default;
};

struct SimulationPath {
    ModelParams params;
    ClaimTensor claims;
    PaymentTensor payments;
    std::optional<RetainedSeverities> severities;

    // Payments of one cell; empty unless severities were retained.
    std::span<const double> severities_at(std::size_t occ, std::size_t lag, std::size_t runoff) const;

    bool operator==(const SimulationPath&) const = default;
};

// Poisson ultimate counts, multinomial lag split, binomial survival with
// conditional probability survival[k] / survival[k-1]. Payment counts are left zero.
ClaimTensor simulate_counts(RandomStream& stream, const ModelParams& params);

struct PaymentDraw {
    Grid3<Count> pay_counts;
    PaymentTensor payments;
    std::optional<RetainedSeverities> severities;
};

// Per cell: nu ~ Binomial(N, pay_prob[k]) and Z = sum of nu Gamma(EW_jk, Var_jk) severities.
PaymentDraw simulate_payments(RandomStream& stream, const ModelParams& params, const Grid3<Count>& active,
                              bool retain_severities = false);

// simulate_counts followed by simulate_payments on the same stream.
SimulationPath simulate_path(RandomStream& stream, const ModelParams& params, bool retain_severities = false);

} // namespace reserve3d
