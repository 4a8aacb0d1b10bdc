#include "reserve3d/commands.hpp"

#include "reserve3d/aggregation.hpp"
#include "reserve3d/calibration.hpp"
#include "reserve3d/chain_ladder.hpp"
#include "reserve3d/moments.hpp"
#include "reserve3d/output.hpp"
#include "reserve3d/simulation.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace reserve3d {

namespace fs = std::filesystem;

std::string distribution_file_name(Statistic s) { return "distribution_" + std::string(to_string(s)) + ".csv"; }

void run_simulate(const RunConfig& config, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const ModelParams& params = validate_params(config.params);

    const auto dists = run_monte_carlo(params, {config.replicates, config.master_seed, config.workers},
                                       config.statistics);
    const auto analytic = analytic_reserve_moments(params);

    std::vector<RiskReport> reports;
    for (Statistic s : config.statistics) {
        const auto& dist = dists.at(s);
        reports.push_back(make_risk_report(dist, config.quantile_levels, statistic_moments(analytic, s)));
        write_distribution_csv(out_dir / distribution_file_name(s), dist);
    }
    write_summary_json(out_dir / kSummaryFile, reports, config.master_seed, config.replicates);

    RandomStream stream(config.master_seed, 0);
    const auto sample = simulate_path(stream, params, true);
    write_triangle_csv(out_dir / kTriangleOccurrenceFile, triangle_occurrence(sample));
    write_triangle_csv(out_dir / kTriangleReportingFile, triangle_reporting(sample));
    write_mean_claim_size_csv(out_dir / kMeanClaimSizeFile, mean_claim_size(sample));
    write_path_csv(out_dir / kSamplePathFile, sample);
    write_severities_csv(out_dir / kSampleSeveritiesFile, sample);

    // Placement settings do not affect results; normalize them so the echo is location-independent.
    RunConfig echo = config;
    echo.workers = 0;
    echo.output_dir = RunConfig{}.output_dir;
    write_config(out_dir / kConfigEchoFile, echo);
}

RunConfig run_calibrate(const RunConfig& base, const fs::path& simulate_dir) {
    const fs::path severities = simulate_dir / kSampleSeveritiesFile;
    std::optional<fs::path> sev_file;
    if (fs::exists(severities)) sev_file = severities;
    const auto path = read_path_csv(simulate_dir / kSamplePathFile, sev_file, base.params);

    RunConfig out = base;
    out.params = calibrate_params(path, base.params);
    out.counts_rule.reset();
    out.severity_dispersion.reset();
    validate_params(out.params);
    return out;
}

void run_compare(const RunConfig& config, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const auto table = compare_2d_3d(config.params, config.replicates, config.master_seed, config.workers);
    write_comparison_csv(out_dir / kComparisonFile, table);
    write_comparison_summary_csv(out_dir / kComparisonSummaryFile, table);
}

namespace {

std::string fixed(double v, int decimals = 2) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

} // namespace

std::string render_report(const fs::path& dir) {
    std::ostringstream out;
    bool found = false;

    if (std::ifstream in(dir / kSummaryFile); in) {
        found = true;
        const auto doc = nlohmann::json::parse(in);
        out << "Monte Carlo reserve distributions (" << doc.at("replicates").get<std::size_t>()
            << " replicates, seed " << doc.at("master_seed").get<std::uint64_t>() << ")\n";
        for (const auto& [name, s] : doc.at("statistics").items()) {
            out << "\n" << name << "\n";
            out << "  mean      " << fixed(s.at("mean").get<double>()) << "   (analytic "
                << fixed(s.at("analytic_mean").get<double>()) << ")\n";
            out << "  std dev   " << fixed(s.at("std_dev").get<double>()) << "   (analytic "
                << fixed(s.at("analytic_std").get<double>()) << ")\n";
            out << "  range     [" << fixed(s.at("min").get<double>()) << ", " << fixed(s.at("max").get<double>())
                << "]\n";
            for (const auto& r : s.at("risk"))
                out << "  level " << fixed(r.at("level").get<double>(), 3) << "  VaR " << fixed(r.at("var").get<double>())
                    << "  ES " << fixed(r.at("es").get<double>()) << "\n";
        }
    }

    if (std::ifstream in(dir / kComparisonSummaryFile); in) {
        found = true;
        out << "\n2D vs 3D estimators\n";
        out << "  estimator                 target             ok    failed  bias          rmse\n";
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            std::vector<std::string> f;
            std::istringstream ls(line);
            for (std::string field; std::getline(ls, field, ',');) f.push_back(field);
            if (f.size() != 7) continue;
            char buf[256];
            std::snprintf(buf, sizeof(buf), "  %-25s %-18s %-5s %-7s %-13s %s\n", f[0].c_str(), f[1].c_str(),
                          f[2].c_str(), f[3].c_str(), fixed(std::stod(f[5])).c_str(), fixed(std::stod(f[6])).c_str());
            out << buf;
        }
    }

    if (!found) throw std::runtime_error("no simulate or compare outputs found in " + dir.string());
    return out.str();
}

} // namespace reserve3d
