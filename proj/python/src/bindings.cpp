#include "reserve3d/aggregation.hpp"
#include "reserve3d/calibration.hpp"
#include "reserve3d/chain_ladder.hpp"
#include "reserve3d/config.hpp"
#include "reserve3d/errors.hpp"
#include "reserve3d/moments.hpp"
#include "reserve3d/monte_carlo.hpp"
#include "reserve3d/params.hpp"
#include "reserve3d/simulation.hpp"

#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

namespace py = pybind11;
using namespace reserve3d;

namespace {

template <class T>
py::array_t<T> to_array(const Grid3<T>& g) {
    py::array_t<T> out({g.extent0(), g.extent1(), g.extent2()});
    std::copy(g.data().begin(), g.data().end(), out.mutable_data());
    return out;
}

py::array_t<double> to_array(const Grid2<double>& g) {
    py::array_t<double> out({g.rows(), g.cols()});
    std::copy(g.data().begin(), g.data().end(), out.mutable_data());
    return out;
}

Grid2<double> to_grid(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw ParameterError("expected a 2-d array");
    Grid2<double> g(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    std::copy(a.data(), a.data() + a.size(), g.data().begin());
    return g;
}

// Absent cells as NaN.
py::array_t<double> to_array(const Triangle& t) {
    const std::size_t h = t.horizon();
    py::array_t<double> out({h, h});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t d = 0; d < h; ++d)
            view(r, d) = t.at(r, d).value_or(std::numeric_limits<double>::quiet_NaN());
    return out;
}

Triangle cumulative_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw ParameterError("expected a square 2-d array");
    const auto h = static_cast<std::size_t>(a.shape(0));
    Triangle t(TriangleOrientation::occurrence_runoff, TriangleForm::cumulative, h);
    auto view = a.unchecked<2>();
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t d = 0; d <= t.latest_dev(r); ++d) t.value(r, d) = view(r, d);
    return t;
}

py::array_t<double> optional_array(const std::vector<std::optional<double>>& xs) {
    py::array_t<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        out.mutable_at(i) = xs[i].value_or(std::numeric_limits<double>::quiet_NaN());
    return out;
}

py::array_t<double> optional_array(const Grid2<std::optional<double>>& g) {
    py::array_t<double> out({g.rows(), g.cols()});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            view(r, c) = g(r, c).value_or(std::numeric_limits<double>::quiet_NaN());
    return out;
}

py::dict breakdown_dict(const ReserveBreakdown& b) {
    py::dict d;
    d["ibnr_count"] = b.ibnr_count;
    d["ibnr_reserve"] = b.ibnr_reserve;
    d["reported_reserve"] = b.reported_reserve;
    d["total_reserve"] = b.total_reserve;
    return d;
}

std::vector<Statistic> parse_statistics(const std::optional<std::vector<std::string>>& names) {
    if (!names) return all_statistics();
    std::vector<Statistic> out;
    for (const auto& n : *names) {
        const auto s = parse_statistic(n);
        if (!s) throw ParameterError("unknown statistic: " + n);
        out.push_back(*s);
    }
    return out;
}

EmpiricalDistribution distribution(const std::vector<double>& samples) { return {"samples", samples}; }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Three-dimensional stochastic claims reserving";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<EstimationError>(m, "EstimationError", PyExc_RuntimeError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("occurrence_years", &ModelParams::occurrence_years)
        .def_readwrite("max_lag", &ModelParams::max_lag)
        .def_readwrite("max_runoff", &ModelParams::max_runoff)
        .def_readwrite("expected_counts", &ModelParams::expected_counts)
        .def_readwrite("lag_probs", &ModelParams::lag_probs)
        .def_readwrite("survival", &ModelParams::survival)
        .def_readwrite("pay_prob", &ModelParams::pay_prob)
        .def_property(
            "severity_mean", [](const ModelParams& p) { return to_array(p.severity_mean); },
            [](ModelParams& p, const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
                p.severity_mean = to_grid(a);
            })
        .def_property(
            "severity_var", [](const ModelParams& p) { return to_array(p.severity_var); },
            [](ModelParams& p, const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
                p.severity_var = to_grid(a);
            })
        .def("validate", [](const ModelParams& p) { validate_params(p); })
        .def("check",
             [](const ModelParams& p) {
                 const auto r = check_params(p);
                 return py::make_tuple(r.errors, r.warnings);
             })
        .def(py::self == py::self)
        .def("__repr__", [](const ModelParams& p) {
            return "<ModelParams I=" + std::to_string(p.occurrence_years) + " J=" + std::to_string(p.max_lag) +
                   " K=" + std::to_string(p.max_runoff) + ">";
        });

    m.def("default_params", &default_params);
    m.def("make_expected_counts", &make_expected_counts, py::arg("base"), py::arg("growth"), py::arg("years"));

    py::class_<SimulationPath>(m, "SimulationPath")
        .def_readonly("params", &SimulationPath::params)
        .def_property_readonly("active", [](const SimulationPath& s) { return to_array(s.claims.active); })
        .def_property_readonly("payments", [](const SimulationPath& s) { return to_array(s.claims.payments); })
        .def_property_readonly("paid", [](const SimulationPath& s) { return to_array(s.payments.paid); })
        .def_property_readonly("has_severities", [](const SimulationPath& s) { return s.severities.has_value(); })
        .def("severities_at", [](const SimulationPath& s, std::size_t occ, std::size_t lag, std::size_t runoff) {
            const auto xs = s.severities_at(occ, lag, runoff);
            return std::vector<double>(xs.begin(), xs.end());
        });

    m.def(
        "simulate_path",
        [](const ModelParams& p, std::uint64_t master_seed, std::uint64_t stream_id, bool retain_severities) {
            validate_params(p);
            RandomStream s(master_seed, stream_id);
            return simulate_path(s, p, retain_severities);
        },
        py::arg("params"), py::arg("master_seed"), py::arg("stream_id") = 0, py::arg("retain_severities") = false);

    m.def("reserve_breakdown", [](const SimulationPath& s) { return breakdown_dict(reserve_breakdown(s)); });
    m.def("triangle_occurrence", [](const SimulationPath& s) { return to_array(triangle_occurrence(s)); });
    m.def("triangle_reporting", [](const SimulationPath& s) { return to_array(triangle_reporting(s)); });
    m.def("known_payments", [](const SimulationPath& s) {
        return known_payments(s.payments.paid, s.params.occurrence_years);
    });
    m.def("mean_claim_size", [](const SimulationPath& s) { return optional_array(mean_claim_size(s)); });
    m.def("expected_occurrence_triangle", [](const ModelParams& p) { return to_array(expected_occurrence_triangle(p)); });

    m.def("analytic_moments", [](const ModelParams& p) {
        const auto mo = analytic_reserve_moments(p);
        py::dict d;
        for (Statistic s : all_statistics()) {
            const auto x = statistic_moments(mo, s);
            d[py::str(std::string(to_string(s)))] = py::make_tuple(x.mean, x.variance);
        }
        return d;
    });

    m.def(
        "run_monte_carlo",
        [](const ModelParams& p, std::size_t replicates, std::uint64_t master_seed, unsigned workers,
           const std::optional<std::vector<std::string>>& statistics) {
            const auto stats = parse_statistics(statistics);
            std::map<Statistic, EmpiricalDistribution> dists;
            {
                py::gil_scoped_release release;
                dists = run_monte_carlo(p, {replicates, master_seed, workers}, stats);
            }
            py::dict d;
            for (const auto& [s, dist] : dists)
                d[py::str(std::string(to_string(s)))] = py::array_t<double>(dist.samples().size(), dist.samples().data());
            return d;
        },
        py::arg("params"), py::arg("replicates"), py::arg("master_seed"), py::arg("workers") = 0,
        py::arg("statistics") = py::none());

    m.def("value_at_risk", [](const std::vector<double>& xs, double level) {
        return value_at_risk(distribution(xs), level);
    });
    m.def("expected_shortfall", [](const std::vector<double>& xs, double level) {
        return expected_shortfall(distribution(xs), level);
    });

    m.def("chain_ladder", [](const py::array_t<double, py::array::c_style | py::array::forcecast>& cumulative) {
        const auto r = chain_ladder(cumulative_from_array(cumulative));
        py::dict d;
        d["development_factors"] = r.development_factors;
        d["completed"] = to_array(r.completed);
        d["reserve_per_row"] = r.reserve_per_row;
        d["total_reserve"] = r.total_reserve;
        return d;
    });

    m.def(
        "compare_2d_3d",
        [](const ModelParams& p, std::size_t replicates, std::uint64_t master_seed, unsigned workers) {
            ComparisonTable table;
            {
                py::gil_scoped_release release;
                table = compare_2d_3d(p, replicates, master_seed, workers);
            }
            py::list out;
            for (const auto& s : table.summary) {
                py::dict d;
                d["estimator"] = std::string(to_string(s.estimator));
                d["target"] = std::string(target_of(s.estimator));
                d["succeeded"] = s.succeeded;
                d["failed"] = s.failed;
                d["bias"] = s.bias;
                d["rmse"] = s.rmse;
                d["mean_truth"] = s.mean_truth;
                out.append(d);
            }
            return out;
        },
        py::arg("params"), py::arg("replicates"), py::arg("master_seed"), py::arg("workers") = 0);

    m.def("estimate_lag_probs", py::overload_cast<const SimulationPath&>(&estimate_lag_probs));
    m.def("estimate_survival", py::overload_cast<const SimulationPath&>(&estimate_survival));
    m.def("estimate_pay_prob", [](const SimulationPath& s) { return optional_array(estimate_pay_prob(s)); });
    m.def("estimate_severity", [](const SimulationPath& s) {
        const auto sev = estimate_severity(s);
        py::dict d;
        d["mean"] = optional_array(sev.mean);
        d["variance"] = optional_array(sev.variance);
        d["dispersion"] = estimate_dispersion(sev);
        return d;
    });
    m.def("calibrate_params", &calibrate_params, py::arg("path"), py::arg("fallback"));

    py::class_<RunConfig>(m, "RunConfig")
        .def_readonly("params", &RunConfig::params)
        .def_readonly("replicates", &RunConfig::replicates)
        .def_readonly("master_seed", &RunConfig::master_seed)
        .def_readonly("quantile_levels", &RunConfig::quantile_levels)
        .def_readonly("output_dir", &RunConfig::output_dir)
        .def_readonly("workers", &RunConfig::workers)
        .def_property_readonly("statistics", [](const RunConfig& c) {
            std::vector<std::string> out;
            for (Statistic s : c.statistics) out.emplace_back(to_string(s));
            return out;
        });
    m.def("load_config", [](const std::string& path) { return load_config(path); });
    m.def("parse_config", [](const std::string& text) { return parse_config_text(text); });
    m.def("default_config_text", [] { return config_to_text(default_config()); });
}
