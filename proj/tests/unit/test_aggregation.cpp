#include "reserve3d/aggregation.hpp"
#include "reserve3d/simulation.hpp"
#include "aggregation_oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace reserve3d;
using namespace reserve3d::testing;

TEST_CASE("cell classification is a partition") {
    for (std::size_t I = 1; I <= 6; ++I)
        for (std::size_t i = 1; i <= I; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                for (std::size_t k = 0; k < 5; ++k) {
                    const bool known = i + j + k <= I;
                    const bool ibnr = i + j > I;
                    const bool reported_future = i + j <= I && i + j + k > I;
                    CHECK(int(known) + int(ibnr) + int(reported_future) == 1);
                    const auto c = classify_cell(i, j, k, I);
                    CHECK((c == CellClass::known) == known);
                    CHECK((c == CellClass::ibnr_future) == ibnr);
                    CHECK((c == CellClass::reported_future) == reported_future);
                }
}

TEST_CASE("triangles of an all-zero tensor") {
    const Grid3<double> z(3, 2, 3, 0.0);
    for (const auto& tri : {triangle_occurrence(z, 3), triangle_reporting(z, 3)}) {
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t n = 0; n < 3; ++n) {
                if (tri.is_known(r, n)) CHECK(*tri.at(r, n) == 0.0);
                else CHECK_FALSE(tri.at(r, n).has_value());
            }
    }
}

TEST_CASE("single payment lands in the expected triangle cells") {
    // I = 2, Z_{1,0,1} = 7.
    Grid3<double> z(2, 2, 2, 0.0);
    z(0, 0, 1) = 7.0;
    const auto s1 = triangle_occurrence(z, 2);
    const auto s2 = triangle_reporting(z, 2);
    CHECK(*s1.at(0, 1) == 7.0);
    CHECK(*s1.at(0, 0) == 0.0);
    CHECK(*s1.at(1, 0) == 0.0);
    CHECK_FALSE(s1.at(1, 1).has_value());
    CHECK(*s2.at(0, 1) == 7.0);
    CHECK(*s2.at(0, 0) == 0.0);
    CHECK(*s2.at(1, 0) == 0.0);
    CHECK_THROWS_AS(s1.value(1, 1), std::out_of_range);
}

TEST_CASE("projections partition the known payments") {
    const auto p = default_params();
    for (std::uint64_t r = 0; r < 10; ++r) {
        RandomStream s(31, r);
        const auto path = simulate_path(s, p);
        const double known = known_payments(path.payments.paid, p.occurrence_years);
        CHECK(triangle_occurrence(path).sum() == doctest::Approx(known).epsilon(1e-12));
        CHECK(triangle_reporting(path).sum() == doctest::Approx(known).epsilon(1e-12));
    }
}

TEST_CASE("reserve breakdown special cases") {
    SUBCASE("no reporting lag means no IBNR") {
        const auto p = small_params({40, 50, 60}, {1.0}, {1.0, 0.7, 0.4}, {0.5, 0.5, 0.5});
        RandomStream s(4, 0);
        const auto b = reserve_breakdown(simulate_path(s, p));
        CHECK(b.ibnr_count == 0);
        CHECK(b.ibnr_reserve == 0.0);
        CHECK(b.reported_reserve > 0.0);
    }
    SUBCASE("everything paid in the reporting year") {
        const auto p = small_params({40, 50, 60}, {1.0}, {1.0, 0.0, 0.0}, {1.0, 1.0, 1.0});
        RandomStream s(4, 0);
        const auto b = reserve_breakdown(simulate_path(s, p));
        CHECK(b.total_reserve == 0.0);
    }
    SUBCASE("hand-built tensor, I = 2, J = 2, K = 1") {
        Grid3<Count> n(2, 2, 2, 0);
        Grid3<double> z(2, 2, 2, 0.0);
        // (i, j, k) -> class: (1,0,0) known, (1,0,1) known, (1,1,0) known, (1,1,1) reported future,
        // (2,0,0) known, (2,0,1) reported future, (2,1,*) IBNR.
        n(0, 0, 0) = 5; n(0, 1, 0) = 3; n(1, 0, 0) = 4; n(1, 1, 0) = 2;
        z(0, 0, 0) = 1; z(0, 0, 1) = 2; z(0, 1, 0) = 4; z(0, 1, 1) = 8;
        z(1, 0, 0) = 16; z(1, 0, 1) = 32; z(1, 1, 0) = 64; z(1, 1, 1) = 128;
        const auto b = reserve_breakdown(n, z, 2);
        CHECK(b.ibnr_count == 2);
        CHECK(b.ibnr_reserve == 192.0);
        CHECK(b.reported_reserve == 40.0);
        CHECK(b.total_reserve == 232.0);
        CHECK(known_payments(z, 2) == 23.0);
    }
}

TEST_CASE("projections and breakdown agree with the exhaustive oracle") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t I = 1 + rng() % 4;
        const std::size_t J = 1 + rng() % 4;
        const std::size_t K1 = 1 + rng() % 4;
        Grid3<Count> n(I, J, K1, 0);
        Grid3<double> z(I, J, K1, 0.0);
        for (auto& c : n.data()) c = static_cast<Count>(rng() % 20);
        for (auto& v : z.data()) v = (rng() % 3 == 0) ? 0.0 : u(rng);

        const auto s1 = triangle_occurrence(z, I);
        const auto s2 = triangle_reporting(z, I);
        const auto o1 = oracle_occurrence(z, I);
        const auto o2 = oracle_reporting(z, I);
        for (std::size_t m = 1; m <= I; ++m)
            for (std::size_t d = 0; d < I; ++d) {
                CHECK(s1.at(m - 1, d).has_value() == (m + d <= I));
                if (m + d <= I) {
                    CHECK(*s1.at(m - 1, d) == doctest::Approx(o1[m][d]).epsilon(1e-12));
                    CHECK(*s2.at(m - 1, d) == doctest::Approx(o2[m][d]).epsilon(1e-12));
                }
            }
        const auto b = reserve_breakdown(n, z, I);
        const auto o = oracle_breakdown(n, z, I);
        CHECK(b.ibnr_count == o.ibnr_count);
        CHECK(b.ibnr_reserve == doctest::Approx(o.ibnr_reserve).epsilon(1e-12));
        CHECK(b.reported_reserve == doctest::Approx(o.reported_reserve).epsilon(1e-12));
        CHECK(b.total_reserve == b.ibnr_reserve + b.reported_reserve);
    }
}

TEST_CASE("mean claim size") {
    SUBCASE("zero payments with active claims") {
        Grid3<Count> n(2, 1, 2, 3);
        const Grid3<double> z(2, 1, 2, 0.0);
        const auto mcs = mean_claim_size(n, z);
        CHECK(*mcs(0, 0) == 0.0);
        CHECK(*mcs(0, 1) == 0.0);
    }
    SUBCASE("single claim, single payment") {
        Grid3<Count> n(1, 1, 2, 0);
        Grid3<double> z(1, 1, 2, 0.0);
        n(0, 0, 0) = 1;
        z(0, 0, 0) = 12.0;
        const auto mcs = mean_claim_size(n, z);
        CHECK(*mcs(0, 0) == 12.0);
        CHECK_FALSE(mcs(0, 1).has_value());
    }
    SUBCASE("brute force double sum") {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 50; ++trial) {
            Grid3<Count> n(3, 2, 3, 0);
            Grid3<double> z(3, 2, 3, 0.0);
            for (auto& c : n.data()) c = static_cast<Count>(rng() % 4);
            for (auto& v : z.data()) v = static_cast<double>(rng() % 50);
            const auto mcs = mean_claim_size(n, z);
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 3; ++k) {
                    double num = 0.0;
                    Count den = 0;
                    for (std::size_t i = 0; i < 3; ++i)
                        for (std::size_t l = 0; l < 3; ++l) {
                            if (l >= k) num += z(i, j, l);
                            if (l == k) den += n(i, j, l);
                        }
                    CHECK(mcs(j, k).has_value() == (den > 0));
                    if (den > 0) CHECK(*mcs(j, k) == doctest::Approx(num / static_cast<double>(den)));
                }
        }
    }
}

TEST_CASE("expected occurrence triangle matches the cell expectations") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(rng, 4, 3, 2);
        const auto full = expected_occurrence_development(p);
        const auto tri = expected_occurrence_triangle(p);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t n = 0; n < 4; ++n) {
                double expected = 0.0;
                for (std::size_t j = 0; j < 3; ++j)
                    for (std::size_t k = 0; k <= 2; ++k)
                        if (j + k == n)
                            expected += p.expected_counts[r] * p.lag_probs[j] * p.survival[k] * p.pay_prob[k] *
                                        p.severity_mean(j, k);
                CHECK(full(r, n) == doctest::Approx(expected).epsilon(1e-12));
                if (tri.is_known(r, n)) CHECK(*tri.at(r, n) == full(r, n));
            }
    }
}
