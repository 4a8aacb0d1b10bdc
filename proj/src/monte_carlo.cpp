#include "reserve3d/monte_carlo.hpp"

#include "reserve3d/errors.hpp"
#include "reserve3d/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace reserve3d {

std::string_view to_string(Statistic s) {
    switch (s) {
    case Statistic::ibnr_count: return "ibnr_count";
    case Statistic::ibnr_reserve: return "ibnr_reserve";
    case Statistic::reported_reserve: return "reported_reserve";
    case Statistic::total_reserve: return "total_reserve";
    }
    return "unknown";
}

std::optional<Statistic> parse_statistic(std::string_view name) {
    for (Statistic s : all_statistics())
        if (to_string(s) == name) return s;
    return std::nullopt;
}

const std::vector<Statistic>& all_statistics() {
    static const std::vector<Statistic> all{Statistic::ibnr_count, Statistic::ibnr_reserve,
                                            Statistic::reported_reserve, Statistic::total_reserve};
    return all;
}

double statistic_value(const ReserveBreakdown& b, Statistic s) {
    switch (s) {
    case Statistic::ibnr_count: return static_cast<double>(b.ibnr_count);
    case Statistic::ibnr_reserve: return b.ibnr_reserve;
    case Statistic::reported_reserve: return b.reported_reserve;
    case Statistic::total_reserve: return b.total_reserve;
    }
    return 0.0;
}

Moments statistic_moments(const ReserveMoments& m, Statistic s) {
    switch (s) {
    case Statistic::ibnr_count: return m.ibnr_count;
    case Statistic::ibnr_reserve: return m.ibnr_reserve;
    case Statistic::reported_reserve: return m.reported_reserve;
    case Statistic::total_reserve: return m.total_reserve;
    }
    return {};
}

EmpiricalDistribution::EmpiricalDistribution(std::string name, std::vector<double> samples)
    : name_(std::move(name)), samples_(std::move(samples)) {
    std::sort(samples_.begin(), samples_.end());
}

namespace {

void check_level(const EmpiricalDistribution& dist, double level) {
    if (dist.samples().empty()) throw StateError("risk measure of an empty distribution '" + dist.name() + "'");
    if (!(level > 0.0 && level < 1.0)) throw ParameterError("risk level must lie in (0, 1)");
}

// ceil(x) that ignores representation noise such as (1 - 0.95) * 100 = 5.000000000000004.
std::size_t robust_ceil(double x) {
    return static_cast<std::size_t>(std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))));
}

} // namespace

double value_at_risk(const EmpiricalDistribution& dist, double level) {
    check_level(dist, level);
    const std::size_t n = dist.replicate_count();
    const std::size_t rank = std::clamp<std::size_t>(robust_ceil(level * static_cast<double>(n)), 1, n);
    return dist.samples()[rank - 1];
}

double expected_shortfall(const EmpiricalDistribution& dist, double level) {
    check_level(dist, level);
    const std::size_t n = dist.replicate_count();
    const std::size_t tail = std::clamp<std::size_t>(robust_ceil((1.0 - level) * static_cast<double>(n)), 1, n);
    double sum = 0.0;
    for (std::size_t i = n - tail; i < n; ++i) sum += dist.samples()[i];
    return sum / static_cast<double>(tail);
}

SummaryStats summary_stats(const EmpiricalDistribution& dist) {
    const auto& xs = dist.samples();
    if (xs.empty()) throw StateError("summary of an empty distribution '" + dist.name() + "'");
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
    return {mean, sd, xs.front(), xs.back()};
}

RiskReport make_risk_report(const EmpiricalDistribution& dist, std::span<const double> levels,
                            const Moments& analytic) {
    RiskReport report{dist.name(), dist.replicate_count(), summary_stats(dist), {}, analytic.mean,
                      analytic.std_dev()};
    for (double level : levels)
        report.levels.push_back({level, value_at_risk(dist, level), expected_shortfall(dist, level)});
    return report;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::size_t index = next.fetch_add(1, std::memory_order_relaxed);
            if (index >= count) return;
            try {
                body(index);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

std::map<Statistic, EmpiricalDistribution> run_monte_carlo(const ModelParams& params, const MonteCarloOptions& options,
                                                           std::span<const Statistic> statistics) {
    validate_params(params);
    if (options.replicates == 0) throw ParameterError("replicate count must be at least 1");

    std::vector<ReserveBreakdown> results(options.replicates);
    parallel_for(options.replicates, options.workers, [&](std::size_t r) {
        RandomStream stream(options.master_seed, r);
        results[r] = reserve_breakdown(simulate_path(stream, params));
    });

    std::map<Statistic, EmpiricalDistribution> out;
    for (Statistic s : statistics) {
        std::vector<double> values;
        values.reserve(results.size());
        for (const auto& b : results) values.push_back(statistic_value(b, s));
        out.emplace(s, EmpiricalDistribution(std::string(to_string(s)), std::move(values)));
    }
    return out;
}

} // namespace reserve3d
