#include "reserve3d/triangle.hpp"

#include "reserve3d/errors.hpp"

#include <stdexcept>
#include <string>

namespace reserve3d {

std::string_view to_string(TriangleOrientation o) {
    return o == TriangleOrientation::occurrence_runoff ? "occurrence_runoff" : "reporting_runoff";
}

std::string_view to_string(TriangleForm f) {
    return f == TriangleForm::incremental ? "incremental" : "cumulative";
}

Triangle::Triangle(TriangleOrientation orientation, TriangleForm form, std::size_t horizon)
    : orientation_(orientation), form_(form), horizon_(horizon), cells_(horizon, horizon, 0.0) {}

std::optional<double> Triangle::at(std::size_t row, std::size_t dev) const {
    if (!is_known(row, dev)) return std::nullopt;
    return cells_(row, dev);
}

double Triangle::value(std::size_t row, std::size_t dev) const {
    if (!is_known(row, dev))
        throw std::out_of_range("triangle cell (" + std::to_string(row) + ", " + std::to_string(dev) +
                                ") is outside the known region");
    return cells_(row, dev);
}

double& Triangle::value(std::size_t row, std::size_t dev) {
    if (!is_known(row, dev))
        throw std::out_of_range("triangle cell (" + std::to_string(row) + ", " + std::to_string(dev) +
                                ") is outside the known region");
    return cells_(row, dev);
}

double Triangle::sum() const {
    double total = 0.0;
    for (std::size_t r = 0; r < horizon_; ++r)
        for (std::size_t n = 0; n <= latest_dev(r); ++n) total += cells_(r, n);
    return total;
}

Triangle cumulate(const Triangle& incremental) {
    if (incremental.form() != TriangleForm::incremental) throw StateError("cumulate expects an incremental triangle");
    Triangle out(incremental.orientation(), TriangleForm::cumulative, incremental.horizon());
    for (std::size_t r = 0; r < incremental.horizon(); ++r) {
        double running = 0.0;
        for (std::size_t n = 0; n <= incremental.latest_dev(r); ++n) {
            running += incremental.value(r, n);
            out.value(r, n) = running;
        }
    }
    return out;
}

Triangle difference(const Triangle& cumulative) {
    if (cumulative.form() != TriangleForm::cumulative) throw StateError("difference expects a cumulative triangle");
    Triangle out(cumulative.orientation(), TriangleForm::incremental, cumulative.horizon());
    for (std::size_t r = 0; r < cumulative.horizon(); ++r) {
        double prev = 0.0;
        for (std::size_t n = 0; n <= cumulative.latest_dev(r); ++n) {
            const double c = cumulative.value(r, n);
            out.value(r, n) = c - prev;
            prev = c;
        }
    }
    return out;
}

} // namespace reserve3d
