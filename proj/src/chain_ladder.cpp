#include "reserve3d/chain_ladder.hpp"

#include "reserve3d/aggregation.hpp"
#include "reserve3d/errors.hpp"
#include "reserve3d/moments.hpp"
#include "reserve3d/monte_carlo.hpp"
#include "reserve3d/simulation.hpp"

#include <array>
#include <cmath>

namespace reserve3d {

ChainLadderResult chain_ladder(const Triangle& tri) {
    if (tri.form() != TriangleForm::cumulative) throw StateError("chain ladder expects a cumulative triangle");
    const std::size_t h = tri.horizon();
    if (h < 2) throw EstimationError("chain ladder needs at least two origin rows");

    ChainLadderResult out;
    out.development_factors.resize(h - 1);
    for (std::size_t n = 0; n + 1 < h; ++n) {
        double numerator = 0.0;
        double denominator = 0.0;
        for (std::size_t r = 0; tri.is_known(r, n + 1); ++r) {
            numerator += tri.value(r, n + 1);
            denominator += tri.value(r, n);
        }
        if (denominator == 0.0)
            throw EstimationError("zero cumulative sum in development column " + std::to_string(n));
        out.development_factors[n] = numerator / denominator;
    }

    out.completed = Grid2<double>(h, h, 0.0);
    out.reserve_per_row.assign(h, 0.0);
    for (std::size_t r = 0; r < h; ++r) {
        const std::size_t latest = tri.latest_dev(r);
        for (std::size_t n = 0; n <= latest; ++n) out.completed(r, n) = tri.value(r, n);
        for (std::size_t n = latest + 1; n < h; ++n)
            out.completed(r, n) = out.completed(r, n - 1) * out.development_factors[n - 1];
        out.reserve_per_row[r] = out.completed(r, h - 1) - out.completed(r, latest);
        out.total_reserve += out.reserve_per_row[r];
    }
    return out;
}

std::string_view to_string(Estimator e) {
    switch (e) {
    case Estimator::analytic_total: return "analytic_3d_total";
    case Estimator::analytic_reported: return "analytic_3d_reported";
    case Estimator::chain_ladder_occurrence: return "chain_ladder_occurrence";
    case Estimator::chain_ladder_reporting: return "chain_ladder_reporting";
    }
    return "unknown";
}

std::string_view target_of(Estimator e) {
    switch (e) {
    case Estimator::analytic_total:
    case Estimator::chain_ladder_occurrence: return "total_reserve";
    case Estimator::analytic_reported:
    case Estimator::chain_ladder_reporting: return "reported_reserve";
    }
    return "unknown";
}

ComparisonTable compare_2d_3d(const ModelParams& params, std::size_t replicates, std::uint64_t master_seed,
                              unsigned workers) {
    validate_params(params);
    if (replicates == 0) throw ParameterError("replicate count must be at least 1");

    constexpr std::array estimators{Estimator::analytic_total, Estimator::analytic_reported,
                                    Estimator::chain_ladder_occurrence, Estimator::chain_ladder_reporting};
    const auto analytic = analytic_reserve_moments(params);

    std::vector<ComparisonRow> rows(replicates * estimators.size());
    parallel_for(replicates, workers, [&](std::size_t r) {
        RandomStream stream(master_seed, r);
        const auto path = simulate_path(stream, params);
        const auto truth = reserve_breakdown(path);

        auto cl_estimate = [](const Triangle& incremental, ComparisonRow& row) {
            try {
                row.estimate = chain_ladder(cumulate(incremental)).total_reserve;
            } catch (const EstimationError& e) {
                row.error = e.what();
            }
        };

        ComparisonRow* slot = &rows[r * estimators.size()];
        for (std::size_t e = 0; e < estimators.size(); ++e) {
            ComparisonRow& row = slot[e];
            row.replicate = r;
            row.estimator = estimators[e];
            row.truth = target_of(estimators[e]) == "total_reserve" ? truth.total_reserve : truth.reported_reserve;
            switch (estimators[e]) {
            case Estimator::analytic_total: row.estimate = analytic.total_reserve.mean; break;
            case Estimator::analytic_reported: row.estimate = analytic.reported_reserve.mean; break;
            case Estimator::chain_ladder_occurrence: cl_estimate(triangle_occurrence(path), row); break;
            case Estimator::chain_ladder_reporting: cl_estimate(triangle_reporting(path), row); break;
            }
        }
    });

    ComparisonTable table;
    for (Estimator e : estimators) {
        EstimatorSummary s{e};
        double sum_err = 0.0;
        double sum_sq = 0.0;
        double sum_truth = 0.0;
        for (const auto& row : rows) {
            if (row.estimator != e) continue;
            sum_truth += row.truth;
            if (!row.estimate) {
                ++s.failed;
                continue;
            }
            ++s.succeeded;
            const double err = *row.estimate - row.truth;
            sum_err += err;
            sum_sq += err * err;
        }
        s.mean_truth = sum_truth / static_cast<double>(replicates);
        if (s.succeeded > 0) {
            s.bias = sum_err / static_cast<double>(s.succeeded);
            s.rmse = std::sqrt(sum_sq / static_cast<double>(s.succeeded));
        } else {
            s.bias = s.rmse = std::nan("");
        }
        table.summary.push_back(s);
    }
    table.rows = std::move(rows);
    return table;
}

} // namespace reserve3d
