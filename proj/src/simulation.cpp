#include "reserve3d/simulation.hpp"

#include "reserve3d/errors.hpp"

namespace reserve3d {

std::span<const double> SimulationPath::severities_at(std::size_t occ, std::size_t lag, std::size_t runoff) const {
    if (!severities) return {};
    const std::size_t cell = payments.paid.flat_index(occ, lag, runoff);
    const auto& s = *severities;
    return std::span<const double>(s.amounts).subspan(s.offsets[cell], s.offsets[cell + 1] - s.offsets[cell]);
}

ClaimTensor simulate_counts(RandomStream& stream, const ModelParams& params) {
    const std::size_t years = params.occurrence_years;
    const std::size_t lags = params.max_lag;
    const std::size_t runoffs = params.runoff_count();
    ClaimTensor out(years, lags, runoffs);

    std::vector<double> step(runoffs, 1.0);
    for (std::size_t k = 1; k < runoffs; ++k) step[k] = params.conditional_survival(k);

    for (std::size_t occ = 0; occ < years; ++occ) {
        const Count ultimate = sample_poisson(stream, params.expected_counts[occ]);
        const auto reported = sample_multinomial(stream, ultimate, params.lag_probs);
        for (std::size_t j = 0; j < lags; ++j) {
            Count active = reported[j];
            out.active(occ, j, 0) = active;
            for (std::size_t k = 1; k < runoffs && active > 0; ++k) {
                active = sample_binomial(stream, active, step[k]);
                out.active(occ, j, k) = active;
            }
        }
    }
    return out;
}

PaymentDraw simulate_payments(RandomStream& stream, const ModelParams& params, const Grid3<Count>& active,
                              bool retain_severities) {
    const std::size_t years = params.occurrence_years;
    const std::size_t lags = params.max_lag;
    const std::size_t runoffs = params.runoff_count();
    if (active.extent0() != years || active.extent1() != lags || active.extent2() != runoffs)
        throw ParameterError("claim tensor shape does not match the model parameters");

    PaymentDraw out{Grid3<Count>(years, lags, runoffs, 0), PaymentTensor(years, lags, runoffs), std::nullopt};
    if (retain_severities) {
        out.severities.emplace();
        out.severities->offsets.reserve(active.size() + 1);
        out.severities->offsets.push_back(0);
    }

    for (std::size_t occ = 0; occ < years; ++occ) {
        for (std::size_t j = 0; j < lags; ++j) {
            for (std::size_t k = 0; k < runoffs; ++k) {
                const Count n = active(occ, j, k);
                const Count paying = n > 0 ? sample_binomial(stream, n, params.pay_prob[k]) : 0;
                out.pay_counts(occ, j, k) = paying;
                const double mean = params.severity_mean(j, k);
                const double var = params.severity_var(j, k);
                double total = 0.0;
                for (Count l = 0; l < paying; ++l) {
                    const double x = sample_gamma_mv(stream, mean, var);
                    total += x;
                    if (out.severities) out.severities->amounts.push_back(x);
                }
                out.payments.paid(occ, j, k) = total;
                if (out.severities) out.severities->offsets.push_back(out.severities->amounts.size());
            }
        }
    }
    return out;
}

SimulationPath simulate_path(RandomStream& stream, const ModelParams& params, bool retain_severities) {
    SimulationPath path;
    path.params = params;
    path.claims = simulate_counts(stream, params);
    auto draw = simulate_payments(stream, params, path.claims.active, retain_severities);
    path.claims.payments = std::move(draw.pay_counts);
    path.payments = std::move(draw.payments);
    path.severities = std::move(draw.severities);
    return path;
}

} // namespace reserve3d
