#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace virial::report {

/// One temperature of a B2(T*) table.
struct ScanRow {
    double t_star = 0.0;
    double b2_integral = 0.0;
    std::optional<double> b2_series;  // empty below the series region
    double db2_dt = 0.0;
    double b2_over_t = 0.0;
    double residual = 0.0;  // db2_dt - b2_over_t
};

/// Number of grid points t_min + i * step <= t_max (with a 1e-9 step slack).
std::size_t grid_size(double t_min, double t_max, double step);

std::vector<ScanRow> scan(double t_min, double t_max, double step);

/// 12 significant digits, '.' decimal separator.
std::string format_number(double x);

/// Same rounding, as a JSON number.
nlohmann::json json_number(double x);

inline constexpr const char* kScanHeader = "t_star,b2_integral,b2_series,db2_dt,b2_over_t,residual";

std::string scan_csv(const std::vector<ScanRow>& rows);
nlohmann::json scan_json(const std::vector<ScanRow>& rows);

}  // namespace virial::report
