#pragma once

#include "reserve3d/grid.hpp"

#include <cstddef>
#include <optional>
#include <string_view>

namespace reserve3d {

enum class TriangleOrientation { occurrence_runoff, reporting_runoff };
enum class TriangleForm { incremental, cumulative };

std::string_view to_string(TriangleOrientation o);
std::string_view to_string(TriangleForm f);

// Square run-off matrix of size horizon x horizon. Row r stands for origin year
// m = r + 1, column n for development n. Cell (r, n) is known iff m + n <= horizon;
// the remaining cells are absent, which is distinct from a zero entry.
class Triangle {
public:
    Triangle(TriangleOrientation orientation, TriangleForm form, std::size_t horizon);

    TriangleOrientation orientation() const noexcept { return orientation_; }
    TriangleForm form() const noexcept { return form_; }
    std::size_t horizon() const noexcept { return horizon_; }

    bool is_known(std::size_t row, std::size_t dev) const noexcept {
        return row < horizon_ && dev < horizon_ && row + dev + 1 <= horizon_;
    }
    // Last known development column of a row.
    std::size_t latest_dev(std::size_t row) const noexcept { return horizon_ - 1 - row; }

    std::optional<double> at(std::size_t row, std::size_t dev) const;
    // Known-cell access; throws std::out_of_range on an absent cell.
    double value(std::size_t row, std::size_t dev) const;
    double& value(std::size_t row, std::size_t dev);

    double sum() const;

    bool operator==(const Triangle&) const = default;

private:
    TriangleOrientation orientation_;
    TriangleForm form_;
    std::size_t horizon_;
    Grid2<double> cells_;
};

// Row-wise prefix sums over the known region.
Triangle cumulate(const Triangle& incremental);
// Inverse of cumulate.
Triangle difference(const Triangle& cumulative);

} // namespace reserve3d
