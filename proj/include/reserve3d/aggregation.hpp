#pragma once

#include "reserve3d/grid.hpp"
#include "reserve3d/params.hpp"
#include "reserve3d/random.hpp"
#include "reserve3d/simulation.hpp"
#include "reserve3d/triangle.hpp"

#include <optional>

namespace reserve3d {

// Position of a cell relative to the valuation plane i + j + k = horizon.
enum class CellClass {
    known,            // i + j + k <= horizon
    ibnr_future,      // i + j > horizon: claim not yet reported
    reported_future,  // i + j <= horizon < i + j + k
};

// year is the 1-based occurrence year, lag and runoff are 0-based.
constexpr CellClass classify_cell(std::size_t year, std::size_t lag, std::size_t runoff, std::size_t horizon) {
    if (year + lag > horizon) return CellClass::ibnr_future;
    if (year + lag + runoff > horizon) return CellClass::reported_future;
    return CellClass::known;
}

struct ReserveBreakdown {
    Count ibnr_count = 0;
    double ibnr_reserve = 0.0;
    double reported_reserve = 0.0;
    double total_reserve = 0.0;  // ibnr_reserve + reported_reserve
};

// S1(m, n) = sum over j + k = n of Z(m, j, k), known region only.
Triangle triangle_occurrence(const Grid3<double>& paid, std::size_t horizon);
Triangle triangle_occurrence(const SimulationPath& path);

// S2(m, n) = sum over i + j = m of Z(i, j, n), known region only.
Triangle triangle_reporting(const Grid3<double>& paid, std::size_t horizon);
Triangle triangle_reporting(const SimulationPath& path);

ReserveBreakdown reserve_breakdown(const Grid3<Count>& active, const Grid3<double>& paid, std::size_t horizon);
ReserveBreakdown reserve_breakdown(const SimulationPath& path);

// Sum of all payments in known cells.
double known_payments(const Grid3<double>& paid, std::size_t horizon);

// MCS(j, k) = sum_{i, l >= k} Z(i, j, l) / sum_i N(i, j, k); absent where the denominator is zero.
Grid2<std::optional<double>> mean_claim_size(const Grid3<Count>& active, const Grid3<double>& paid);
Grid2<std::optional<double>> mean_claim_size(const SimulationPath& path);

// Expected incremental payments E[S1(m, n)] = N_m * sum_{j+k=n} lambda_j eta_k p_k EW_jk
// for every row and development n = 0..horizon-1, known or not.
Grid2<double> expected_occurrence_development(const ModelParams& params);

// expected_occurrence_development masked to the known region.
Triangle expected_occurrence_triangle(const ModelParams& params);

} // namespace reserve3d
