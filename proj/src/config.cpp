#include "reserve3d/config.hpp"

#include "reserve3d/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace reserve3d {

using nlohmann::json;

namespace {

const std::vector<double> kDefaultLevels{0.5, 0.75, 0.9, 0.95, 0.99, 0.995};

class Reader {
public:
    std::vector<std::string> errors;

    void fail(const std::string& key, const std::string& reason) { errors.push_back(key + ": " + reason); }

    const json* member(const json& obj, const std::string& prefix, const char* name, bool required) {
        const std::string key = prefix + "." + name;
        if (!obj.is_object() || !obj.contains(name)) {
            if (required) fail(key, "missing required key");
            return nullptr;
        }
        return &obj.at(name);
    }

    std::optional<double> number(const json& v, const std::string& key) {
        if (!v.is_number()) {
            fail(key, "expected a number");
            return std::nullopt;
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            fail(key, "must be finite");
            return std::nullopt;
        }
        return d;
    }

    std::optional<std::uint64_t> unsigned_integer(const json& v, const std::string& key) {
        if (!v.is_number_unsigned()) {
            fail(key, "expected a non-negative integer");
            return std::nullopt;
        }
        return v.get<std::uint64_t>();
    }

    std::optional<std::vector<double>> vector(const json& v, const std::string& key) {
        if (!v.is_array()) {
            fail(key, "expected an array of numbers");
            return std::nullopt;
        }
        std::vector<double> out;
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto d = number(v[i], key + "[" + std::to_string(i) + "]");
            if (!d) ok = false;
            else out.push_back(*d);
        }
        if (!ok) return std::nullopt;
        return out;
    }

    std::optional<Grid2<double>> grid(const json& v, const std::string& key, std::size_t rows, std::size_t cols) {
        if (!v.is_array() || v.size() != rows) {
            fail(key, "expected an array of " + std::to_string(rows) + " rows");
            return std::nullopt;
        }
        Grid2<double> out(rows, cols);
        bool ok = true;
        for (std::size_t r = 0; r < rows; ++r) {
            const std::string row_key = key + "[" + std::to_string(r) + "]";
            auto row = vector(v[r], row_key);
            if (!row) {
                ok = false;
                continue;
            }
            if (row->size() != cols) {
                fail(row_key, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row->size()));
                ok = false;
                continue;
            }
            for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*row)[c];
        }
        if (!ok) return std::nullopt;
        return out;
    }
};

void read_model(Reader& rd, const json& model, RunConfig& cfg) {
    const std::string p = "model";
    if (!model.is_object()) {
        rd.fail(p, "expected an object");
        return;
    }
    ModelParams& mp = cfg.params;
    auto dim = [&](const char* name, std::size_t& out) {
        if (const json* v = rd.member(model, p, name, true))
            if (auto n = rd.unsigned_integer(*v, p + "." + name)) out = static_cast<std::size_t>(*n);
    };
    dim("occurrence_years", mp.occurrence_years);
    dim("max_lag", mp.max_lag);
    dim("max_runoff", mp.max_runoff);
    if (!rd.errors.empty()) return;

    if (const json* v = rd.member(model, p, "expected_counts", true)) {
        const std::string key = p + ".expected_counts";
        if (v->is_object()) {
            const json* base = rd.member(*v, key, "base", true);
            const json* growth = rd.member(*v, key, "growth", true);
            const auto b = base ? rd.number(*base, key + ".base") : std::nullopt;
            const auto g = growth ? rd.number(*growth, key + ".growth") : std::nullopt;
            if (b.has_value() && g.has_value()) {
                const GrowthRule rule{b.value(), g.value()};
                try {
                    mp.expected_counts = make_expected_counts(rule.base, rule.growth, mp.occurrence_years);
                    cfg.counts_rule = rule;
                } catch (const ParameterError& e) {
                    rd.fail(key, e.what());
                }
            }
        } else if (auto counts = rd.vector(*v, key)) {
            mp.expected_counts = std::move(*counts);
        }
    }

    auto vec = [&](const char* name, std::vector<double>& out) {
        if (const json* v = rd.member(model, p, name, true))
            if (auto x = rd.vector(*v, p + "." + name)) out = std::move(*x);
    };
    vec("lag_probs", mp.lag_probs);
    vec("survival", mp.survival);
    vec("pay_prob", mp.pay_prob);

    const std::size_t runoffs = mp.runoff_count();
    bool have_mean = false;
    if (const json* v = rd.member(model, p, "severity_mean", true)) {
        if (auto g = rd.grid(*v, p + ".severity_mean", mp.max_lag, runoffs)) {
            mp.severity_mean = std::move(*g);
            have_mean = true;
        }
    }
    if (const json* v = rd.member(model, p, "severity_var", true)) {
        const std::string key = p + ".severity_var";
        if (v->is_object()) {
            const json* d = rd.member(*v, key, "dispersion", true);
            auto disp = d ? rd.number(*d, key + ".dispersion") : std::nullopt;
            if (disp && *disp < 0.0) {
                rd.fail(key + ".dispersion", "must be non-negative");
            } else if (disp && have_mean) {
                mp.severity_var = Grid2<double>(mp.max_lag, runoffs);
                for (std::size_t j = 0; j < mp.max_lag; ++j)
                    for (std::size_t k = 0; k < runoffs; ++k) mp.severity_var(j, k) = *disp * mp.severity_mean(j, k);
                cfg.severity_dispersion = *disp;
            }
        } else if (auto g = rd.grid(*v, key, mp.max_lag, runoffs)) {
            mp.severity_var = std::move(*g);
        }
    }
}

void read_run(Reader& rd, const json& run, RunConfig& cfg, const ConfigOverrides& ov) {
    const std::string p = "run";
    if (!run.is_object()) {
        rd.fail(p, "expected an object");
        return;
    }
    if (ov.replicates) {
        cfg.replicates = *ov.replicates;
    } else if (const json* v = rd.member(run, p, "replicates", true)) {
        if (auto n = rd.unsigned_integer(*v, p + ".replicates")) cfg.replicates = static_cast<std::size_t>(*n);
    }
    if (ov.master_seed) {
        cfg.master_seed = *ov.master_seed;
    } else if (const json* v = rd.member(run, p, "master_seed", true)) {
        if (auto n = rd.unsigned_integer(*v, p + ".master_seed")) cfg.master_seed = *n;
    }
    if (cfg.replicates == 0 && rd.errors.empty()) rd.fail(p + ".replicates", "must be at least 1");

    cfg.statistics = all_statistics();
    if (const json* v = rd.member(run, p, "statistics", false)) {
        cfg.statistics.clear();
        if (!v->is_array()) rd.fail(p + ".statistics", "expected an array of names");
        else
            for (std::size_t i = 0; i < v->size(); ++i) {
                const std::string key = p + ".statistics[" + std::to_string(i) + "]";
                const auto s = (*v)[i].is_string() ? parse_statistic((*v)[i].get<std::string>()) : std::nullopt;
                if (!s) rd.fail(key, "unknown statistic");
                else cfg.statistics.push_back(*s);
            }
    }

    cfg.quantile_levels = kDefaultLevels;
    if (const json* v = rd.member(run, p, "quantile_levels", false)) {
        if (auto levels = rd.vector(*v, p + ".quantile_levels")) {
            cfg.quantile_levels = std::move(*levels);
            for (std::size_t i = 0; i < cfg.quantile_levels.size(); ++i) {
                const double l = cfg.quantile_levels[i];
                if (!(l > 0.0 && l < 1.0))
                    rd.fail(p + ".quantile_levels[" + std::to_string(i) + "]", "must lie in (0, 1)");
            }
        }
    }

    if (ov.output_dir) {
        cfg.output_dir = *ov.output_dir;
    } else if (const json* v = rd.member(run, p, "output_dir", false)) {
        if (!v->is_string()) rd.fail(p + ".output_dir", "expected a string");
        else cfg.output_dir = v->get<std::string>();
    }

    if (ov.workers) {
        cfg.workers = *ov.workers;
    } else if (const json* v = rd.member(run, p, "workers", false)) {
        if (auto n = rd.unsigned_integer(*v, p + ".workers")) cfg.workers = static_cast<unsigned>(*n);
    }
}

nlohmann::ordered_json grid_to_json(const Grid2<double>& g) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

RunConfig parse_config_text(std::string_view text, const ConfigOverrides& overrides) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("<document>: malformed JSON: ") + e.what()});
    }
    if (!doc.is_object()) throw ConfigError({"<document>: expected a JSON object"});

    Reader rd;
    RunConfig cfg;
    if (const json* model = rd.member(doc, "", "model", true)) read_model(rd, *model, cfg);
    if (const json* run = rd.member(doc, "", "run", true)) read_run(rd, *run, cfg, overrides);
    for (auto& e : rd.errors)
        if (e.starts_with('.')) e.erase(0, 1);
    if (!rd.errors.empty()) throw ConfigError(std::move(rd.errors));

    auto report = check_params(cfg.params);
    if (!report.ok()) {
        std::vector<std::string> issues;
        for (const auto& e : report.errors) issues.push_back("model." + e);
        throw ConfigError(std::move(issues));
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path, const ConfigOverrides& overrides) {
    std::ifstream in(path);
    if (!in) throw ConfigError({path.string() + ": cannot open config file"});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), overrides);
}

std::string config_to_text(const RunConfig& cfg) {
    const ModelParams& mp = cfg.params;
    nlohmann::ordered_json model = nlohmann::ordered_json::object();
    model["occurrence_years"] = mp.occurrence_years;
    model["max_lag"] = mp.max_lag;
    model["max_runoff"] = mp.max_runoff;
    if (cfg.counts_rule && make_expected_counts(cfg.counts_rule->base, cfg.counts_rule->growth,
                                                mp.occurrence_years) == mp.expected_counts)
        model["expected_counts"] = nlohmann::ordered_json{{"base", cfg.counts_rule->base}, {"growth", cfg.counts_rule->growth}};
    else
        model["expected_counts"] = mp.expected_counts;
    model["lag_probs"] = mp.lag_probs;
    model["survival"] = mp.survival;
    model["pay_prob"] = mp.pay_prob;
    model["severity_mean"] = grid_to_json(mp.severity_mean);

    bool dispersion_matches = cfg.severity_dispersion.has_value();
    if (dispersion_matches)
        for (std::size_t j = 0; j < mp.max_lag && dispersion_matches; ++j)
            for (std::size_t k = 0; k < mp.runoff_count(); ++k)
                if (mp.severity_var(j, k) != *cfg.severity_dispersion * mp.severity_mean(j, k)) {
                    dispersion_matches = false;
                    break;
                }
    if (dispersion_matches) model["severity_var"] = nlohmann::ordered_json{{"dispersion", *cfg.severity_dispersion}};
    else model["severity_var"] = grid_to_json(mp.severity_var);

    auto stats = nlohmann::ordered_json::array();
    for (Statistic s : cfg.statistics) stats.push_back(std::string(to_string(s)));
    nlohmann::ordered_json run = {{"replicates", cfg.replicates},           {"master_seed", cfg.master_seed},
                {"statistics", stats},                    {"quantile_levels", cfg.quantile_levels},
                {"output_dir", cfg.output_dir},           {"workers", cfg.workers}};

    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["model"] = std::move(model);
    doc["run"] = std::move(run);
    return doc.dump(2) + "\n";
}

void write_config(const std::filesystem::path& path, const RunConfig& config) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write config file " + path.string());
    out << config_to_text(config);
}

RunConfig default_config() {
    RunConfig cfg;
    cfg.params = default_params();
    cfg.counts_rule = GrowthRule{150.0, 0.03};
    cfg.severity_dispersion = 4.0;
    cfg.replicates = 1000;
    cfg.master_seed = 20080101;
    cfg.statistics = all_statistics();
    cfg.quantile_levels = kDefaultLevels;
    cfg.output_dir = "out";
    cfg.workers = 0;
    return cfg;
}

} // namespace reserve3d
