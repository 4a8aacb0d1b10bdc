#include "reserve3d/aggregation.hpp"

#include "reserve3d/errors.hpp"

namespace reserve3d {

Triangle triangle_occurrence(const Grid3<double>& paid, std::size_t horizon) {
    if (paid.extent0() != horizon) throw ParameterError("payment tensor rows must match the horizon");
    Triangle tri(TriangleOrientation::occurrence_runoff, TriangleForm::incremental, horizon);
    for (std::size_t occ = 0; occ < paid.extent0(); ++occ) {
        const std::size_t year = occ + 1;
        for (std::size_t j = 0; j < paid.extent1(); ++j) {
            for (std::size_t k = 0; k < paid.extent2(); ++k) {
                if (classify_cell(year, j, k, horizon) != CellClass::known) break;
                tri.value(occ, j + k) += paid(occ, j, k);
            }
        }
    }
    return tri;
}

Triangle triangle_occurrence(const SimulationPath& path) {
    return triangle_occurrence(path.payments.paid, path.params.occurrence_years);
}

Triangle triangle_reporting(const Grid3<double>& paid, std::size_t horizon) {
    if (paid.extent0() != horizon) throw ParameterError("payment tensor rows must match the horizon");
    Triangle tri(TriangleOrientation::reporting_runoff, TriangleForm::incremental, horizon);
    for (std::size_t occ = 0; occ < paid.extent0(); ++occ) {
        const std::size_t year = occ + 1;
        for (std::size_t j = 0; j < paid.extent1(); ++j) {
            const std::size_t reporting_row = year + j - 1;
            for (std::size_t k = 0; k < paid.extent2(); ++k) {
                if (classify_cell(year, j, k, horizon) != CellClass::known) break;
                tri.value(reporting_row, k) += paid(occ, j, k);
            }
        }
    }
    return tri;
}

Triangle triangle_reporting(const SimulationPath& path) {
    return triangle_reporting(path.payments.paid, path.params.occurrence_years);
}

ReserveBreakdown reserve_breakdown(const Grid3<Count>& active, const Grid3<double>& paid, std::size_t horizon) {
    ReserveBreakdown out;
    for (std::size_t occ = 0; occ < paid.extent0(); ++occ) {
        const std::size_t year = occ + 1;
        for (std::size_t j = 0; j < paid.extent1(); ++j) {
            if (year + j > horizon) out.ibnr_count += active(occ, j, 0);
            for (std::size_t k = 0; k < paid.extent2(); ++k) {
                switch (classify_cell(year, j, k, horizon)) {
                case CellClass::ibnr_future: out.ibnr_reserve += paid(occ, j, k); break;
                case CellClass::reported_future: out.reported_reserve += paid(occ, j, k); break;
                case CellClass::known: break;
                }
            }
        }
    }
    out.total_reserve = out.ibnr_reserve + out.reported_reserve;
    return out;
}

ReserveBreakdown reserve_breakdown(const SimulationPath& path) {
    return reserve_breakdown(path.claims.active, path.payments.paid, path.params.occurrence_years);
}

double known_payments(const Grid3<double>& paid, std::size_t horizon) {
    double total = 0.0;
    for (std::size_t occ = 0; occ < paid.extent0(); ++occ)
        for (std::size_t j = 0; j < paid.extent1(); ++j)
            for (std::size_t k = 0; k < paid.extent2(); ++k)
                if (classify_cell(occ + 1, j, k, horizon) == CellClass::known) total += paid(occ, j, k);
    return total;
}

Grid2<std::optional<double>> mean_claim_size(const Grid3<Count>& active, const Grid3<double>& paid) {
    const std::size_t lags = paid.extent1();
    const std::size_t runoffs = paid.extent2();
    Grid2<std::optional<double>> out(lags, runoffs);
    for (std::size_t j = 0; j < lags; ++j) {
        for (std::size_t k = 0; k < runoffs; ++k) {
            double numerator = 0.0;
            Count denominator = 0;
            for (std::size_t occ = 0; occ < paid.extent0(); ++occ) {
                denominator += active(occ, j, k);
                for (std::size_t l = k; l < runoffs; ++l) numerator += paid(occ, j, l);
            }
            if (denominator > 0) out(j, k) = numerator / static_cast<double>(denominator);
        }
    }
    return out;
}

Grid2<std::optional<double>> mean_claim_size(const SimulationPath& path) {
    return mean_claim_size(path.claims.active, path.payments.paid);
}

Grid2<double> expected_occurrence_development(const ModelParams& params) {
    const std::size_t horizon = params.occurrence_years;
    std::vector<double> pattern(horizon, 0.0);
    for (std::size_t j = 0; j < params.max_lag; ++j)
        for (std::size_t k = 0; k < params.runoff_count() && j + k < horizon; ++k)
            pattern[j + k] += params.lag_probs[j] * params.survival[k] * params.pay_prob[k] * params.severity_mean(j, k);

    Grid2<double> out(horizon, horizon, 0.0);
    for (std::size_t r = 0; r < horizon; ++r)
        for (std::size_t n = 0; n < horizon; ++n) out(r, n) = params.expected_counts[r] * pattern[n];
    return out;
}

Triangle expected_occurrence_triangle(const ModelParams& params) {
    const auto full = expected_occurrence_development(params);
    Triangle tri(TriangleOrientation::occurrence_runoff, TriangleForm::incremental, params.occurrence_years);
    for (std::size_t r = 0; r < tri.horizon(); ++r)
        for (std::size_t n = 0; n <= tri.latest_dev(r); ++n) tri.value(r, n) = full(r, n);
    return tri;
}

} // namespace reserve3d
