#pragma once

#include "reserve3d/aggregation.hpp"
#include "reserve3d/moments.hpp"
#include "reserve3d/params.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reserve3d {

enum class Statistic { ibnr_count, ibnr_reserve, reported_reserve, total_reserve };

std::string_view to_string(Statistic s);
std::optional<Statistic> parse_statistic(std::string_view name);
const std::vector<Statistic>& all_statistics();

double statistic_value(const ReserveBreakdown& breakdown, Statistic s);
Moments statistic_moments(const ReserveMoments& moments, Statistic s);

// Sorted replicate values of one statistic.
class EmpiricalDistribution {
public:
    EmpiricalDistribution(std::string name, std::vector<double> samples);

    const std::string& name() const noexcept { return name_; }
    const std::vector<double>& samples() const noexcept { return samples_; }
    std::size_t replicate_count() const noexcept { return samples_.size(); }

private:
    std::string name_;
    std::vector<double> samples_;
};

struct SummaryStats {
    double mean;
    double std_dev;  // (R-1) denominator; 0 for a single sample
    double min;
    double max;
};

// Order statistic of rank ceil(level * R), 1-based.
double value_at_risk(const EmpiricalDistribution& dist, double level);
// Mean of the ceil((1 - level) * R) largest samples.
double expected_shortfall(const EmpiricalDistribution& dist, double level);
SummaryStats summary_stats(const EmpiricalDistribution& dist);

struct RiskLevel {
    double level;
    double var;
    double es;
};

struct RiskReport {
    std::string statistic;
    std::size_t replicates;
    SummaryStats summary;
    std::vector<RiskLevel> levels;
    double analytic_mean;
    double analytic_std;
};

RiskReport make_risk_report(const EmpiricalDistribution& dist, std::span<const double> levels,
                            const Moments& analytic);

// Runs body(index) for index in [0, count) on `workers` threads (0 = hardware
// concurrency). Work is handed out by an atomic counter; the first exception
// thrown is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

struct MonteCarloOptions {
    std::size_t replicates = 1000;
    std::uint64_t master_seed = 0;
    unsigned workers = 0;
};

// Replicate r uses RandomStream(master_seed, r). Output is independent of the worker count.
std::map<Statistic, EmpiricalDistribution> run_monte_carlo(const ModelParams& params, const MonteCarloOptions& options,
                                                           std::span<const Statistic> statistics);

} // namespace reserve3d
