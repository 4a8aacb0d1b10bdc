#include "reserve3d/params.hpp"

#include "reserve3d/errors.hpp"
#include "reserve3d/format.hpp"

#include <cmath>
#include <numeric>

namespace reserve3d {

double ModelParams::conditional_survival(std::size_t k) const {
    if (k == 0) return 1.0;
    const double prev = survival.at(k - 1);
    if (prev == 0.0) return 0.0;
    return std::min(1.0, survival.at(k) / prev);
}

namespace {

std::string at(const char* field, std::size_t index) {
    return std::string(field) + "[" + std::to_string(index) + "]";
}

void check_size(ValidationReport& report, const char* field, std::size_t actual, std::size_t expected) {
    if (actual != expected)
        report.errors.push_back(std::string(field) + ": expected " + std::to_string(expected) + " entries, got " +
                                std::to_string(actual));
}

} // namespace

ValidationReport check_params(const ModelParams& p) {
    ValidationReport report;
    if (p.occurrence_years == 0) report.errors.emplace_back("occurrence_years: must be positive");
    if (p.max_lag == 0) report.errors.emplace_back("max_lag: must be positive");

    const std::size_t runoffs = p.runoff_count();
    check_size(report, "expected_counts", p.expected_counts.size(), p.occurrence_years);
    check_size(report, "lag_probs", p.lag_probs.size(), p.max_lag);
    check_size(report, "survival", p.survival.size(), runoffs);
    check_size(report, "pay_prob", p.pay_prob.size(), runoffs);
    if (p.severity_mean.rows() != p.max_lag || p.severity_mean.cols() != runoffs)
        report.errors.push_back("severity_mean: expected " + std::to_string(p.max_lag) + " x " +
                                std::to_string(runoffs) + " grid");
    if (p.severity_var.rows() != p.max_lag || p.severity_var.cols() != runoffs)
        report.errors.push_back("severity_var: expected " + std::to_string(p.max_lag) + " x " +
                                std::to_string(runoffs) + " grid");
    if (!report.ok()) return report;

    for (std::size_t i = 0; i < p.expected_counts.size(); ++i) {
        const double v = p.expected_counts[i];
        if (!(v >= 0.0) || !std::isfinite(v))
            report.errors.push_back(at("expected_counts", i) + ": must be non-negative and finite, got " +
                                    format_double(v));
    }

    bool lag_entries_ok = true;
    for (std::size_t j = 0; j < p.lag_probs.size(); ++j) {
        const double v = p.lag_probs[j];
        if (!(v >= 0.0 && v <= 1.0)) {
            report.errors.push_back(at("lag_probs", j) + ": must lie in [0, 1], got " + format_double(v));
            lag_entries_ok = false;
        }
    }
    if (lag_entries_ok) {
        const double sum = std::accumulate(p.lag_probs.begin(), p.lag_probs.end(), 0.0);
        if (std::abs(sum - 1.0) > 1e-9)
            report.errors.push_back("lag_probs: sum " + format_double(sum) + " != 1");
    }

    if (p.survival[0] != 1.0)
        report.errors.push_back("survival[0]: must equal 1, got " + format_double(p.survival[0]));
    for (std::size_t k = 0; k < p.survival.size(); ++k) {
        const double v = p.survival[k];
        if (!(v >= 0.0 && v <= 1.0)) {
            report.errors.push_back(at("survival", k) + ": must lie in [0, 1], got " + format_double(v));
            continue;
        }
        if (k == 0) continue;
        const double prev = p.survival[k - 1];
        if (v > prev) {
            report.errors.push_back("survival: not non-increasing at k=" + std::to_string(k) + " (" +
                                    format_double(prev) + " -> " + format_double(v) + ")");
        } else if (v == prev && v > 0.0) {
            report.warnings.push_back("survival: plateau at k=" + std::to_string(k));
        }
    }

    for (std::size_t k = 0; k < p.pay_prob.size(); ++k) {
        const double v = p.pay_prob[k];
        if (!(v >= 0.0 && v <= 1.0))
            report.errors.push_back(at("pay_prob", k) + ": must lie in [0, 1], got " + format_double(v));
    }

    for (std::size_t j = 0; j < p.max_lag; ++j) {
        for (std::size_t k = 0; k < runoffs; ++k) {
            const double m = p.severity_mean(j, k);
            const double v = p.severity_var(j, k);
            const std::string cell = "[" + std::to_string(j) + "][" + std::to_string(k) + "]";
            if (!(m > 0.0) || !std::isfinite(m))
                report.errors.push_back("severity_mean" + cell + ": must be positive, got " + format_double(m));
            if (!(v >= 0.0) || !std::isfinite(v))
                report.errors.push_back("severity_var" + cell + ": must be non-negative, got " + format_double(v));
        }
    }
    return report;
}

const ModelParams& validate_params(const ModelParams& params) {
    auto report = check_params(params);
    if (!report.ok()) throw ValidationError(std::move(report.errors));
    return params;
}

std::vector<double> make_expected_counts(double base, double growth, std::size_t years) {
    if (!(base > 0.0) || !std::isfinite(base))
        throw ParameterError("expected count base must be positive, got " + format_double(base));
    if (!(growth > -1.0) || !std::isfinite(growth))
        throw ParameterError("growth rate must exceed -1, got " + format_double(growth));
    if (years == 0) throw ParameterError("number of occurrence years must be positive");
    std::vector<double> counts(years);
    for (std::size_t i = 0; i < years; ++i) counts[i] = base * std::pow(1.0 + growth, static_cast<double>(i));
    return counts;
}

ModelParams default_params() {
    ModelParams p;
    p.occurrence_years = 15;
    p.max_lag = 10;
    p.max_runoff = 40;
    p.expected_counts = make_expected_counts(150.0, 0.03, p.occurrence_years);

    // ~40% reported in the occurrence year, under 30% one year later.
    p.lag_probs = {0.40, 0.28, 0.12, 0.07, 0.05, 0.03, 0.02, 0.015, 0.01, 0.005};

    const std::size_t runoffs = p.runoff_count();
    p.survival.resize(runoffs);
    p.pay_prob.resize(runoffs);
    p.severity_mean = Grid2<double>(p.max_lag, runoffs);
    p.severity_var = Grid2<double>(p.max_lag, runoffs);

    // Fast early closing plus a long tail of open bodily-injury claims.
    for (std::size_t k = 0; k < runoffs; ++k) {
        const double t = static_cast<double>(k);
        p.survival[k] = 0.55 * std::exp(-t / 1.5) + 0.45 * std::exp(-t / 15.0);
        p.pay_prob[k] = 0.03 + 0.77 * std::pow(t / 40.0, 1.5);
    }
    p.survival[0] = 1.0;

    // Severity peaks about four years after reporting; the peak grows with the
    // lag up to three years and then falls off quickly.
    for (std::size_t j = 0; j < p.max_lag; ++j) {
        const double lag = static_cast<double>(j);
        const double level = j <= 3 ? 10.0 * (1.0 + 0.3 * lag) : 19.0 * std::exp(-(lag - 3.0));
        for (std::size_t k = 0; k < runoffs; ++k) {
            const double t = static_cast<double>(k);
            const double shape = 0.3 + (t / 4.0) * std::exp(1.0 - t / 4.0);
            p.severity_mean(j, k) = level * shape;
            p.severity_var(j, k) = 4.0 * p.severity_mean(j, k);
        }
    }
    return p;
}

} // namespace reserve3d
