#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "virial/errors.hpp"
#include "virial/lj_virial.hpp"
#include "virial/scan.hpp"
#include "virial/verify.hpp"

using namespace virial;

namespace {

const report::CheckResult& find(const report::VerifyReport& r, const std::string& name) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.name == name; });
    REQUIRE(it != r.checks.end());
    return *it;
}

}  // namespace

TEST_CASE("grid arithmetic") {
    CHECK(report::grid_size(1.0, 50.0, 0.1) == 491);
    CHECK(report::grid_size(4.0, 12.0, 0.1) == 81);
    CHECK(report::grid_size(2.0, 2.0, 0.5) == 1);
    CHECK_THROWS_AS(report::grid_size(0.0, 1.0, 0.1), ArgumentError);
    CHECK_THROWS_AS(report::grid_size(1.0, 2.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(report::grid_size(2.0, 1.0, 0.1), ArgumentError);
}

TEST_CASE("scan rows are internally consistent") {
    const auto rows = report::scan(1.0, 12.0, 0.5);
    REQUIRE(rows.size() == 23);
    int crossings = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        CAPTURE(r.t_star);
        CHECK(std::fabs(r.residual - (r.db2_dt - r.b2_over_t)) <= 1e-12);
        CHECK(r.b2_over_t == r.b2_integral / r.t_star);
        CHECK(r.b2_series.has_value() == (r.t_star >= lj::kSeriesMinTemperature));
        if (r.b2_series) CHECK(std::fabs(*r.b2_series - r.b2_integral) < 1e-6);
        if (i > 0 && (rows[i - 1].residual > 0.0) != (r.residual > 0.0)) ++crossings;
    }
    // the residual's zero near 20/3 is visible in the table
    CHECK(crossings == 1);
}

TEST_CASE("CSV layout") {
    const auto csv = report::scan_csv(report::scan(1.0, 2.0, 0.5));
    CHECK(csv.rfind("t_star,b2_integral,b2_series,db2_dt,b2_over_t,residual\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(csv.find("\r") == std::string::npos);
    // T* = 1 is below the series region: empty cell
    CHECK(csv.find("\n1,-2.53808133632,,") != std::string::npos);
    CHECK(csv.back() == '\n');
}

TEST_CASE("number formatting") {
    CHECK(report::format_number(0.348274831903364) == "0.348274831903");
    CHECK(report::format_number(24.0) == "24");
    CHECK(report::format_number(-1.3639737635669e-08) == "-1.36397376357e-08");
    CHECK(report::json_number(0.348274831903364).get<double>() == 0.348274831903);
}

TEST_CASE("JSON scan uses the CSV field names") {
    const auto j = report::scan_json(report::scan(1.0, 2.0, 0.5));
    REQUIRE(j.at("rows").size() == 3);
    const auto& first = j["rows"][0];
    for (const char* key : {"t_star", "b2_integral", "b2_series", "db2_dt", "b2_over_t", "residual"})
        CHECK(first.contains(key));
    CHECK(first["b2_series"].is_null());
    CHECK(j["rows"][2]["b2_series"].is_number());
}

TEST_CASE("scan output is byte-identical across runs") {
    CHECK(report::scan_csv(report::scan(1.0, 50.0, 0.1)) == report::scan_csv(report::scan(1.0, 50.0, 0.1)));
}

TEST_CASE("verify passes on a clean build") {
    const auto r = report::verify();
    CHECK(r.checks.size() == 9);
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.observed);
        CHECK(c.passed);
        CHECK_FALSE(c.claim.empty());
        CHECK_FALSE(c.expected.empty());
        CHECK_FALSE(c.tolerance.empty());
    }
    CHECK(r.all_passed());
    const auto csv = report::verify_csv(r);
    CHECK(csv.rfind("check,claim,expected,observed,tolerance,passed,seconds\n", 0) == 0);
    CHECK(report::verify_json(r)["passed"].get<bool>());
}

TEST_CASE("verify with a corrupted alpha_1 fails the series check only") {
    report::VerifyOptions o;
    o.mc_samples = 100'000;
    o.alpha1_fault = 1e-3;
    const auto r = report::verify(o);
    CHECK_FALSE(r.all_passed());
    CHECK_FALSE(find(r, "three_route_b2").passed);
    CHECK(find(r, "scaling_theorem").passed);
    CHECK(find(r, "selfsim_fixpoint").passed);
}

TEST_CASE("verify with 10^3 Monte Carlo samples keeps the 3-sigma rule") {
    report::VerifyOptions o;
    o.mc_samples = 1000;
    const auto r = report::verify(o);
    const auto& mc = find(r, "hard_sphere_b3");
    CHECK(mc.passed);
    CHECK(mc.tolerance.find("3 sigma") != std::string::npos);
    CHECK(mc.tolerance.find("0.005") == std::string::npos);
}
