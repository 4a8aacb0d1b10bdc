#pragma once

// Exhaustive evaluation of the projection and reserve definitions, written
// straight from the set conditions and independent of the library's loops.

#include "reserve3d/grid.hpp"
#include "reserve3d/random.hpp"

#include <cstddef>
#include <vector>

namespace reserve3d::testing {

struct OracleBreakdown {
    Count ibnr_count = 0;
    double ibnr_reserve = 0.0;
    double reported_reserve = 0.0;
};

// Returns S(m, n) for 1 <= m <= I, 0 <= n with m + n <= I as a (I+1) x I table (row 0 unused).
inline std::vector<std::vector<double>> oracle_occurrence(const Grid3<double>& z, std::size_t I) {
    std::vector<std::vector<double>> s(I + 1, std::vector<double>(I, 0.0));
    for (std::size_t m = 1; m <= I; ++m)
        for (std::size_t n = 0; m + n <= I; ++n)
            for (std::size_t j = 0; j < z.extent1(); ++j)
                for (std::size_t k = 0; k < z.extent2(); ++k)
                    if (j + k == n && m + j + k <= I) s[m][n] += z(m - 1, j, k);
    return s;
}

inline std::vector<std::vector<double>> oracle_reporting(const Grid3<double>& z, std::size_t I) {
    std::vector<std::vector<double>> s(I + 1, std::vector<double>(I, 0.0));
    for (std::size_t m = 1; m <= I; ++m)
        for (std::size_t n = 0; m + n <= I; ++n)
            for (std::size_t i = 1; i <= z.extent0(); ++i)
                for (std::size_t j = 0; j < z.extent1(); ++j)
                    if (i + j == m && i + j + n <= I && n < z.extent2()) s[m][n] += z(i - 1, j, n);
    return s;
}

inline OracleBreakdown oracle_breakdown(const Grid3<Count>& active, const Grid3<double>& z, std::size_t I) {
    OracleBreakdown out;
    for (std::size_t i = 1; i <= z.extent0(); ++i)
        for (std::size_t j = 0; j < z.extent1(); ++j) {
            const bool unreported = i + j > I;
            if (unreported) out.ibnr_count += active(i - 1, j, 0);
            for (std::size_t k = 0; k < z.extent2(); ++k) {
                const bool future = i + j + k > I;
                if (unreported) out.ibnr_reserve += z(i - 1, j, k);
                else if (future) out.reported_reserve += z(i - 1, j, k);
            }
        }
    return out;
}

} // namespace reserve3d::testing
