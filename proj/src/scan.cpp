#include "virial/scan.hpp"

#include <cmath>
#include <cstdio>

#include "virial/errors.hpp"
#include "virial/lj_virial.hpp"

namespace virial::report {

std::size_t grid_size(double t_min, double t_max, double step) {
    if (!(t_min > 0.0)) throw ArgumentError("--t-min must be positive");
    if (!(step > 0.0)) throw ArgumentError("--step must be positive");
    if (!(t_max >= t_min)) throw ArgumentError("--t-max must not be below --t-min");
    return static_cast<std::size_t>(std::floor((t_max - t_min) / step + 1e-9)) + 1;
}

std::vector<ScanRow> scan(double t_min, double t_max, double step) {
    const std::size_t n = grid_size(t_min, t_max, step);
    std::vector<ScanRow> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t_min + static_cast<double>(i) * step;
        const lj::ReducedTemperature rt(t);
        ScanRow row;
        row.t_star = t;
        row.b2_integral = lj::b2_integral(rt).value;
        if (t >= lj::kSeriesMinTemperature) {
            const auto s = lj::b2_series(rt);
            if (s.converged) row.b2_series = s.value;
        }
        row.db2_dt = lj::db2_dt(rt);
        row.b2_over_t = row.b2_integral / t;
        row.residual = row.db2_dt - row.b2_over_t;
        rows.push_back(row);
    }
    return rows;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

nlohmann::json json_number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return std::stod(format_number(x));
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = kScanHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += format_number(r.t_star) + ',' + format_number(r.b2_integral) + ',' +
               (r.b2_series ? format_number(*r.b2_series) : std::string()) + ',' + format_number(r.db2_dt) + ',' +
               format_number(r.b2_over_t) + ',' + format_number(r.residual) + '\n';
    }
    return out;
}

nlohmann::json scan_json(const std::vector<ScanRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"t_star", json_number(r.t_star)},
                       {"b2_integral", json_number(r.b2_integral)},
                       {"b2_series", r.b2_series ? json_number(*r.b2_series) : nlohmann::json(nullptr)},
                       {"db2_dt", json_number(r.db2_dt)},
                       {"b2_over_t", json_number(r.b2_over_t)},
                       {"residual", json_number(r.residual)}});
    }
    return {{"rows", arr}};
}

}  // namespace virial::report
