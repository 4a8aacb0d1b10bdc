#include "reserve3d/output.hpp"

#include "reserve3d/errors.hpp"
#include "reserve3d/format.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace reserve3d {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

template <class T>
T parse_field(const std::string& text, const fs::path& file, std::size_t line_no) {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw std::runtime_error(file.string() + ":" + std::to_string(line_no) + ": bad numeric field '" + text + "'");
    return value;
}

} // namespace

void write_distribution_csv(const fs::path& path, const EmpiricalDistribution& dist) {
    auto out = open_out(path);
    out << "rank,value\n";
    for (std::size_t i = 0; i < dist.samples().size(); ++i) out << i + 1 << ',' << format_double(dist.samples()[i]) << '\n';
}

void write_triangle_csv(const fs::path& path, const Triangle& tri) {
    auto out = open_out(path);
    out << "origin";
    for (std::size_t n = 0; n < tri.horizon(); ++n) out << ",dev_" << n;
    out << '\n';
    for (std::size_t r = 0; r < tri.horizon(); ++r) {
        out << r + 1;
        for (std::size_t n = 0; n < tri.horizon(); ++n) {
            out << ',';
            if (auto v = tri.at(r, n)) out << format_double(*v);
        }
        out << '\n';
    }
}

void write_mean_claim_size_csv(const fs::path& path, const Grid2<std::optional<double>>& mcs) {
    auto out = open_out(path);
    out << "lag";
    for (std::size_t k = 0; k < mcs.cols(); ++k) out << ",k_" << k;
    out << '\n';
    for (std::size_t j = 0; j < mcs.rows(); ++j) {
        out << j;
        for (std::size_t k = 0; k < mcs.cols(); ++k) {
            out << ',';
            if (mcs(j, k)) out << format_double(*mcs(j, k));
        }
        out << '\n';
    }
}

void write_path_csv(const fs::path& path, const SimulationPath& sim) {
    auto out = open_out(path);
    out << "year,lag,runoff,active,payments,paid\n";
    const auto& paid = sim.payments.paid;
    for (std::size_t occ = 0; occ < paid.extent0(); ++occ)
        for (std::size_t j = 0; j < paid.extent1(); ++j)
            for (std::size_t k = 0; k < paid.extent2(); ++k)
                out << occ + 1 << ',' << j << ',' << k << ',' << sim.claims.active(occ, j, k) << ','
                    << sim.claims.payments(occ, j, k) << ',' << format_double(paid(occ, j, k)) << '\n';
}

void write_severities_csv(const fs::path& path, const SimulationPath& sim) {
    if (!sim.severities) throw StateError("path has no retained severities");
    auto out = open_out(path);
    out << "year,lag,runoff,amount\n";
    const auto& paid = sim.payments.paid;
    for (std::size_t occ = 0; occ < paid.extent0(); ++occ)
        for (std::size_t j = 0; j < paid.extent1(); ++j)
            for (std::size_t k = 0; k < paid.extent2(); ++k)
                for (double x : sim.severities_at(occ, j, k))
                    out << occ + 1 << ',' << j << ',' << k << ',' << format_double(x) << '\n';
}

void write_summary_json(const fs::path& path, std::span<const RiskReport> reports, std::uint64_t master_seed,
                        std::size_t replicates) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["master_seed"] = master_seed;
    doc["replicates"] = replicates;
    ordered_json stats = ordered_json::object();
    for (const auto& r : reports) {
        ordered_json s;
        s["mean"] = r.summary.mean;
        s["std_dev"] = r.summary.std_dev;
        s["min"] = r.summary.min;
        s["max"] = r.summary.max;
        s["analytic_mean"] = r.analytic_mean;
        s["analytic_std"] = r.analytic_std;
        ordered_json risk = ordered_json::array();
        for (const auto& l : r.levels) risk.push_back({{"level", l.level}, {"var", l.var}, {"es", l.es}});
        s["risk"] = std::move(risk);
        stats[r.statistic] = std::move(s);
    }
    doc["statistics"] = std::move(stats);
    auto out = open_out(path);
    out << doc.dump(2) << '\n';
}

void write_comparison_csv(const fs::path& path, const ComparisonTable& table) {
    auto out = open_out(path);
    out << "replicate,estimator,target,estimate,truth,error,status\n";
    for (const auto& row : table.rows) {
        out << row.replicate << ',' << to_string(row.estimator) << ',' << target_of(row.estimator) << ',';
        if (row.estimate) out << format_double(*row.estimate);
        out << ',' << format_double(row.truth) << ',';
        if (row.estimate) out << format_double(*row.estimate - row.truth);
        out << ',' << (row.estimate ? "ok" : "failed: " + row.error) << '\n';
    }
}

void write_comparison_summary_csv(const fs::path& path, const ComparisonTable& table) {
    auto out = open_out(path);
    out << "estimator,target,succeeded,failed,mean_truth,bias,rmse\n";
    for (const auto& s : table.summary)
        out << to_string(s.estimator) << ',' << target_of(s.estimator) << ',' << s.succeeded << ',' << s.failed << ','
            << format_double(s.mean_truth) << ',' << format_double(s.bias) << ',' << format_double(s.rmse) << '\n';
}

SimulationPath read_path_csv(const fs::path& path_csv, const std::optional<fs::path>& severities_csv,
                             const ModelParams& params) {
    const std::size_t years = params.occurrence_years;
    const std::size_t lags = params.max_lag;
    const std::size_t runoffs = params.runoff_count();

    SimulationPath sim;
    sim.params = params;
    sim.claims = ClaimTensor(years, lags, runoffs);
    sim.payments = PaymentTensor(years, lags, runoffs);

    auto cell_of = [&](const std::vector<std::string>& f, const fs::path& file, std::size_t line_no) {
        const auto year = parse_field<std::size_t>(f[0], file, line_no);
        const auto lag = parse_field<std::size_t>(f[1], file, line_no);
        const auto runoff = parse_field<std::size_t>(f[2], file, line_no);
        if (year < 1 || year > years || lag >= lags || runoff >= runoffs)
            throw std::runtime_error(file.string() + ":" + std::to_string(line_no) +
                                     ": cell outside the configured horizons");
        return std::tuple{year - 1, lag, runoff};
    };

    std::ifstream in(path_csv);
    if (!in) throw std::runtime_error("cannot open " + path_csv.string());
    std::string line;
    std::getline(in, line);
    for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 6) throw std::runtime_error(path_csv.string() + ":" + std::to_string(line_no) + ": expected 6 fields");
        const auto [occ, j, k] = cell_of(f, path_csv, line_no);
        sim.claims.active(occ, j, k) = parse_field<Count>(f[3], path_csv, line_no);
        sim.claims.payments(occ, j, k) = parse_field<Count>(f[4], path_csv, line_no);
        sim.payments.paid(occ, j, k) = parse_field<double>(f[5], path_csv, line_no);
    }

    if (severities_csv) {
        std::ifstream sin(*severities_csv);
        if (!sin) throw std::runtime_error("cannot open " + severities_csv->string());
        std::vector<std::vector<double>> per_cell(sim.payments.paid.size());
        std::getline(sin, line);
        for (std::size_t line_no = 2; std::getline(sin, line); ++line_no) {
            if (line.empty()) continue;
            const auto f = split_csv(line);
            if (f.size() != 4)
                throw std::runtime_error(severities_csv->string() + ":" + std::to_string(line_no) + ": expected 4 fields");
            const auto [occ, j, k] = cell_of(f, *severities_csv, line_no);
            per_cell[sim.payments.paid.flat_index(occ, j, k)].push_back(parse_field<double>(f[3], *severities_csv, line_no));
        }
        RetainedSeverities sev;
        sev.offsets.push_back(0);
        for (const auto& cell : per_cell) {
            sev.amounts.insert(sev.amounts.end(), cell.begin(), cell.end());
            sev.offsets.push_back(sev.amounts.size());
        }
        sim.severities = std::move(sev);
    }
    return sim;
}

} // namespace reserve3d
