#include "reserve3d/calibration.hpp"

#include "reserve3d/errors.hpp"

namespace reserve3d {

std::vector<double> estimate_lag_probs(const Grid3<Count>& active) {
    std::vector<Count> per_lag(active.extent1(), 0);
    Count total = 0;
    for (std::size_t occ = 0; occ < active.extent0(); ++occ)
        for (std::size_t j = 0; j < active.extent1(); ++j) {
            per_lag[j] += active(occ, j, 0);
            total += active(occ, j, 0);
        }
    if (total == 0) throw EstimationError("cannot estimate lag probabilities: no reported claims");

    std::vector<double> out(per_lag.size(), 0.0);
    // The last populated lag absorbs rounding so the estimate sums to one.
    std::size_t last = 0;
    for (std::size_t j = 0; j < per_lag.size(); ++j)
        if (per_lag[j] > 0) last = j;
    double assigned = 0.0;
    for (std::size_t j = 0; j < per_lag.size(); ++j) {
        if (j == last) continue;
        out[j] = static_cast<double>(per_lag[j]) / static_cast<double>(total);
        assigned += out[j];
    }
    out[last] = std::max(0.0, 1.0 - assigned);
    return out;
}

std::vector<double> estimate_survival(const Grid3<Count>& active) {
    std::vector<Count> per_runoff(active.extent2(), 0);
    for (std::size_t occ = 0; occ < active.extent0(); ++occ)
        for (std::size_t j = 0; j < active.extent1(); ++j)
            for (std::size_t k = 0; k < active.extent2(); ++k) per_runoff[k] += active(occ, j, k);
    if (per_runoff.empty() || per_runoff[0] == 0)
        throw EstimationError("cannot estimate survival: no reported claims");

    std::vector<double> out(per_runoff.size());
    out[0] = 1.0;
    for (std::size_t k = 1; k < per_runoff.size(); ++k)
        out[k] = static_cast<double>(per_runoff[k]) / static_cast<double>(per_runoff[0]);
    return out;
}

std::vector<std::optional<double>> estimate_pay_prob(const Grid3<Count>& active, const Grid3<Count>& pay_counts) {
    std::vector<Count> actives(active.extent2(), 0);
    std::vector<Count> paying(active.extent2(), 0);
    for (std::size_t occ = 0; occ < active.extent0(); ++occ)
        for (std::size_t j = 0; j < active.extent1(); ++j)
            for (std::size_t k = 0; k < active.extent2(); ++k) {
                actives[k] += active(occ, j, k);
                paying[k] += pay_counts(occ, j, k);
            }
    std::vector<std::optional<double>> out(actives.size());
    for (std::size_t k = 0; k < actives.size(); ++k)
        if (actives[k] > 0) out[k] = static_cast<double>(paying[k]) / static_cast<double>(actives[k]);
    return out;
}

std::vector<double> estimate_expected_counts(const Grid3<Count>& active) {
    std::vector<double> out(active.extent0(), 0.0);
    for (std::size_t occ = 0; occ < active.extent0(); ++occ) {
        Count n = 0;
        for (std::size_t j = 0; j < active.extent1(); ++j) n += active(occ, j, 0);
        out[occ] = static_cast<double>(n);
    }
    return out;
}

SeverityEstimate estimate_severity(const SimulationPath& path) {
    if (!path.severities) throw EstimationError("severity estimation needs retained individual payments");
    const auto& paid = path.payments.paid;
    const std::size_t lags = paid.extent1();
    const std::size_t runoffs = paid.extent2();
    SeverityEstimate out{Grid2<std::optional<double>>(lags, runoffs), Grid2<std::optional<double>>(lags, runoffs),
                         Grid2<std::size_t>(lags, runoffs, 0)};

    for (std::size_t j = 0; j < lags; ++j) {
        for (std::size_t k = 0; k < runoffs; ++k) {
            std::size_t n = 0;
            double sum = 0.0;
            for (std::size_t occ = 0; occ < paid.extent0(); ++occ)
                for (double x : path.severities_at(occ, j, k)) {
                    sum += x;
                    ++n;
                }
            out.payments(j, k) = n;
            if (n == 0) continue;
            const double mean = sum / static_cast<double>(n);
            out.mean(j, k) = mean;
            if (n < 2) continue;
            double ss = 0.0;
            for (std::size_t occ = 0; occ < paid.extent0(); ++occ)
                for (double x : path.severities_at(occ, j, k)) ss += (x - mean) * (x - mean);
            out.variance(j, k) = ss / static_cast<double>(n - 1);
        }
    }
    return out;
}

std::optional<double> estimate_dispersion(const SeverityEstimate& severity) {
    double num = 0.0;
    double den = 0.0;
    const auto& var = severity.variance;
    for (std::size_t j = 0; j < var.rows(); ++j)
        for (std::size_t k = 0; k < var.cols(); ++k) {
            if (!var(j, k)) continue;
            const double w = static_cast<double>(severity.payments(j, k) - 1);
            num += w * *var(j, k);
            den += w * *severity.mean(j, k);
        }
    if (den <= 0.0) return std::nullopt;
    return num / den;
}

std::vector<double> estimate_lag_probs(const SimulationPath& path) { return estimate_lag_probs(path.claims.active); }

std::vector<double> estimate_survival(const SimulationPath& path) { return estimate_survival(path.claims.active); }

std::vector<std::optional<double>> estimate_pay_prob(const SimulationPath& path) {
    return estimate_pay_prob(path.claims.active, path.claims.payments);
}

ModelParams calibrate_params(const SimulationPath& path, const ModelParams& fallback) {
    const auto& dims = path.params;
    if (fallback.occurrence_years != dims.occurrence_years || fallback.max_lag != dims.max_lag ||
        fallback.max_runoff != dims.max_runoff)
        throw ParameterError("fallback parameters must share the path's horizons");

    ModelParams out = fallback;
    out.expected_counts = estimate_expected_counts(path.claims.active);
    out.lag_probs = estimate_lag_probs(path);
    out.survival = estimate_survival(path);

    const auto pay = estimate_pay_prob(path);
    for (std::size_t k = 0; k < pay.size(); ++k)
        if (pay[k]) out.pay_prob[k] = *pay[k];

    if (path.severities) {
        const auto sev = estimate_severity(path);
        for (std::size_t j = 0; j < out.max_lag; ++j)
            for (std::size_t k = 0; k < out.runoff_count(); ++k) {
                if (sev.mean(j, k) && *sev.mean(j, k) > 0.0) out.severity_mean(j, k) = *sev.mean(j, k);
                if (sev.variance(j, k)) out.severity_var(j, k) = *sev.variance(j, k);
            }
    }
    return out;
}

} // namespace reserve3d
