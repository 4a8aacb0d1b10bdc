// Command-line front end: simulate | calibrate | compare | report | default-config.

#include "reserve3d/commands.hpp"
#include "reserve3d/config.hpp"
#include "reserve3d/errors.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace reserve3d;

namespace {

RunConfig resolve_config(const std::string& name, const ConfigOverrides& overrides) {
    if (name == "default") {
        // Route the built-in config through the parser so overrides and
        // validation behave exactly as for a file.
        return parse_config_text(config_to_text(default_config()), overrides);
    }
    return load_config(name, overrides);
}

struct CommonFlags {
    std::string config = "default";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> replicates;
    std::optional<std::string> out;
    std::optional<unsigned> workers;

    void attach(CLI::App* cmd) {
        cmd->add_option("-c,--config", config, "Config file, or 'default' for the built-in config");
        cmd->add_option("--seed", seed, "Master seed (overrides run.master_seed)");
        cmd->add_option("--replicates", replicates, "Monte Carlo replicates (overrides run.replicates)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--out", out, "Output directory (overrides run.output_dir)");
        cmd->add_option("--workers", workers, "Worker threads, 0 = all cores (overrides run.workers)");
    }

    RunConfig load() const { return resolve_config(config, {seed, replicates, out, workers}); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-dimensional stochastic claims reserving: Monte Carlo engine"};
    app.require_subcommand(1);

    CommonFlags sim_flags;
    auto* simulate = app.add_subcommand("simulate", "Run the Monte Carlo experiment and write reserve distributions");
    sim_flags.attach(simulate);

    CommonFlags cal_flags;
    std::string from_dir;
    std::string cal_output;
    auto* calibrate = app.add_subcommand("calibrate", "Estimate parameters from the world written by 'simulate'");
    cal_flags.attach(calibrate);
    calibrate->add_option("--from", from_dir, "Output directory of a previous 'simulate' run")->required();
    calibrate->add_option("-o,--output", cal_output, "Where to write the estimated config (default: <from>/calibrated.json)");

    CommonFlags cmp_flags;
    auto* compare = app.add_subcommand("compare", "Score Chain-Ladder and 3D estimators against simulated truth");
    cmp_flags.attach(compare);

    std::string report_dir;
    auto* report = app.add_subcommand("report", "Print a summary of previous simulate/compare outputs");
    report->add_option("dir", report_dir, "Directory holding simulate/compare outputs")->required();

    auto* defaults = app.add_subcommand("default-config", "Print the built-in config");
    std::string defaults_out;
    defaults->add_option("-o,--output", defaults_out, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*simulate) {
            const auto cfg = sim_flags.load();
            run_simulate(cfg, cfg.output_dir);
            std::cout << "wrote simulation outputs to " << cfg.output_dir << "\n";
        } else if (*calibrate) {
            // Horizons and fallback values come from the run's own config echo unless --config is given.
            RunConfig base;
            if (calibrate->count("--config") == 0 && fs::exists(fs::path(from_dir) / kConfigEchoFile))
                base = load_config(fs::path(from_dir) / kConfigEchoFile,
                                   {cal_flags.seed, cal_flags.replicates, cal_flags.out, cal_flags.workers});
            else
                base = cal_flags.load();
            const auto estimated = run_calibrate(base, from_dir);
            const fs::path target = cal_output.empty() ? fs::path(from_dir) / "calibrated.json" : fs::path(cal_output);
            write_config(target, estimated);
            std::cout << "wrote estimated parameters to " << target.string() << "\n";
        } else if (*compare) {
            const auto cfg = cmp_flags.load();
            run_compare(cfg, cfg.output_dir);
            std::cout << "wrote comparison tables to " << cfg.output_dir << "\n";
        } else if (*report) {
            std::cout << render_report(report_dir);
        } else if (*defaults) {
            if (defaults_out.empty())
                std::cout << config_to_text(default_config());
            else
                write_config(defaults_out, default_config());
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error:\n";
        for (const auto& issue : e.issues()) std::cerr << "  " << issue << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
