// Command-line front end for the virial library.
//
//   virial_cli scan      --t-min 1 --t-max 50 --step 0.1
//   virial_cli fixpoint  [--t-min 4 --t-max 12 --tol 1e-10]
//   virial_cli boyle     [--t-min 2 --t-max 5 --tol 1e-10]
//   virial_cli scaling
//   virial_cli clusters  1,-1/2,2/9
//   virial_cli b3-hs     [--samples 1e7 --seed N]
//   virial_cli verify    [--samples N --seed N]
//
// Every subcommand accepts --json. Exit status: 0 ok, 1 numerical or domain
// failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "virial/balance.hpp"
#include "virial/cluster_expansion.hpp"
#include "virial/errors.hpp"
#include "virial/scaling_map.hpp"
#include "virial/scan.hpp"
#include "virial/selfsim.hpp"
#include "virial/verify.hpp"

namespace {

using nlohmann::json;
using virial::report::format_number;
using virial::report::json_number;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number()) return format_number(v.get<double>());
    return v.dump();
}

void flatten(const std::string& prefix, const json& v, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (const auto& [k, item] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, item, out);
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", v[i], out);
    } else {
        out.emplace_back(prefix, csv_cell(v));
    }
}

// A report is a JSON object; without --json it is printed as key,value CSV.
void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten("", report, rows);
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) std::cout << k << ',' << v << '\n';
}

json fixpoint_json(const virial::selfsim::FixedPointResult& r) {
    return {{"t_star", json_number(r.t_star)},
            {"b2", json_number(r.b2_at_t)},
            {"residual", json_number(r.residual)},
            {"bracket_low", json_number(r.bracket.first)},
            {"bracket_high", json_number(r.bracket.second)},
            {"iterations", r.iterations},
            {"converged", r.converged}};
}

std::string rational_or_empty(const std::optional<virial::Rational>& q) {
    return q ? virial::to_string(*q) : std::string();
}

std::uint64_t to_count(double x, const char* flag) {
    if (!(x >= 1.0) || x != std::floor(x) || x > 1e18)
        throw CLI::ValidationError(flag, "must be a positive integer");
    return static_cast<std::uint64_t>(x);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lennard-Jones second virial coefficient, self-similarity fixed point and fugacity scaling map"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "Print a JSON object instead of CSV");

    struct Window {
        double t_min;
        double t_max;
        double tol = virial::selfsim::kDefaultTol;
    };
    double scan_min = 1.0, scan_max = 50.0, step = 0.1;
    Window fix_window{virial::selfsim::kFixpointWindow.first, virial::selfsim::kFixpointWindow.second};
    Window boyle_window{virial::selfsim::kBoyleWindow.first, virial::selfsim::kBoyleWindow.second};
    double samples = 1e7;
    std::uint64_t seed = virial::report::VerifyOptions{}.mc_seed;
    std::optional<double> alpha1_fault;
    std::vector<std::string> cluster_values;

    auto* scan = app.add_subcommand("scan", "Tabulate B2, dB2/dT and the self-similarity residual");
    scan->add_option("--t-min", scan_min, "Lowest T*")->capture_default_str();
    scan->add_option("--t-max", scan_max, "Highest T*")->capture_default_str();
    scan->add_option("--step", step, "Grid step in T*")->capture_default_str();

    auto* fixpoint = app.add_subcommand("fixpoint", "Locate the T* where dB2/dT = B2/T");
    fixpoint->add_option("--t-min", fix_window.t_min, "Bracket low end")->capture_default_str();
    fixpoint->add_option("--t-max", fix_window.t_max, "Bracket high end")->capture_default_str();
    fixpoint->add_option("--tol", fix_window.tol, "Residual tolerance")->capture_default_str();

    auto* boyle = app.add_subcommand("boyle", "Locate the Boyle temperature B2(T*) = 0");
    boyle->add_option("--t-min", boyle_window.t_min, "Bracket low end")->capture_default_str();
    boyle->add_option("--t-max", boyle_window.t_max, "Bracket high end")->capture_default_str();
    boyle->add_option("--tol", boyle_window.tol, "Tolerance on B2")->capture_default_str();

    auto* scaling = app.add_subcommand("scaling", "Fixed points of the fugacity scaling map and B2*");

    auto* clusters = app.add_subcommand("clusters", "Virial coefficients from cluster integrals b1=1,b2,...");
    clusters->add_option("values", cluster_values, "Rationals b1,b2,... (comma separated)")
        ->required()
        ->delimiter(',');

    auto* b3hs = app.add_subcommand("b3-hs", "Monte Carlo hard-sphere B3/b0^2");
    b3hs->add_option("--samples", samples, "Number of sample pairs")->capture_default_str();
    b3hs->add_option("--seed", seed, "RNG seed")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the identity and cross-route checks");
    verify->add_option("--samples", samples, "Monte Carlo sample pairs")->capture_default_str();
    verify->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
    verify->add_option("--inject-alpha1-fault", alpha1_fault, "Perturb alpha_1 (fault injection)")->group("");

    for (auto* sub : {scan, fixpoint, boyle, scaling, clusters, b3hs, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (scan->parsed()) {
            const auto rows = virial::report::scan(scan_min, scan_max, step);
            if (as_json) std::cout << virial::report::scan_json(rows).dump(2) << '\n';
            else std::cout << virial::report::scan_csv(rows);
        } else if (fixpoint->parsed()) {
            const auto r = virial::selfsim::find_selfsim_fixpoint({fix_window.t_min, fix_window.t_max}, fix_window.tol);
            json out = fixpoint_json(r);
            if (r.converged) out["localized_energy_over_eps0"] = json_number(virial::selfsim::localized_energy(1.0, r));
            emit(out, as_json);
            if (!r.converged) return kExitFailure;
        } else if (boyle->parsed()) {
            const auto r = virial::selfsim::find_boyle({boyle_window.t_min, boyle_window.t_max}, boyle_window.tol);
            emit(fixpoint_json(r), as_json);
            if (!r.converged) return kExitFailure;
        } else if (scaling->parsed()) {
            const virial::scaling::ScalingMap map;
            json fps = json::array();
            for (const auto& p : map.fixed_points()) {
                fps.push_back({{"location", p.at_infinity() ? std::string("inf") : virial::to_string(*p.location)},
                               {"multiplier", rational_or_empty(p.multiplier)},
                               {"stability", virial::scaling::to_string(p.stability)}});
            }
            json coefficients = json::object();
            for (const auto& [degree, c] : map.coefficients()) coefficients[std::to_string(degree)] = virial::to_string(c);
            const auto kc = map.critical_point();
            emit({{"coefficients", coefficients},
                  {"fixed_points", fps},
                  {"critical_point", virial::to_string(kc)},
                  {"multiplier_at_critical", virial::to_string(map.derivative(kc))},
                  {"b2_star", virial::to_string(map.b2_star())},
                  {"beta_mu", json_number(map.beta_mu())}},
                 as_json);
        } else if (clusters->parsed()) {
            std::vector<virial::Rational> b;
            for (const auto& s : cluster_values) b.push_back(virial::parse_rational(s));
            const auto v = virial::cluster::virial_from_clusters(virial::cluster::ClusterIntegralVector(b));
            json bs = json::array(), vs = json::array();
            for (const auto& q : b) bs.push_back(virial::to_string(q));
            for (const auto& q : v.values) vs.push_back(virial::to_string(q));
            emit({{"cluster_integrals", bs}, {"virial_coefficients", vs}}, as_json);
        } else if (b3hs->parsed()) {
            const auto e = virial::balance::hs_b3_mc(to_count(samples, "--samples"), seed);
            emit({{"estimate", json_number(e.estimate)},
                  {"std_error", json_number(e.std_error)},
                  {"samples", e.samples},
                  {"seed", e.seed},
                  {"exact", "5/8"}},
                 as_json);
        } else if (verify->parsed()) {
            virial::report::VerifyOptions options;
            options.mc_samples = to_count(samples, "--samples");
            options.mc_seed = seed;
            options.alpha1_fault = alpha1_fault;
            const auto report = virial::report::verify(options);
            if (as_json) std::cout << virial::report::verify_json(report).dump(2) << '\n';
            else std::cout << virial::report::verify_csv(report);
            for (const auto& c : report.checks)
                if (!c.passed) std::cerr << "FAILED " << c.name << ": " << c.observed << '\n';
            return report.all_passed() ? kExitOk : kExitFailure;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const virial::ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
