#include "virial/selfsim.hpp"

#include <cmath>
#include <sstream>

#include "virial/errors.hpp"
#include "virial/roots.hpp"

namespace virial::selfsim {

namespace {

constexpr std::size_t kMaxIterations = 200;

void check_bracket(std::pair<double, double> bracket, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("root tolerance must be positive");
    if (!(bracket.first > 0.0 && bracket.first < bracket.second))
        throw ArgumentError("bracket must satisfy 0 < low < high");
}

double b2(double t, lj::B2Method method) {
    const lj::ReducedTemperature rt(t);
    switch (method) {
        case lj::B2Method::pair_oracle: return lj::b2_pair_oracle(rt).value;
        case lj::B2Method::series: return lj::b2_series(rt).value;
        case lj::B2Method::integral: break;
    }
    return lj::b2_integral(rt).value;
}

template <class F>
FixedPointResult refine(F&& f, std::pair<double, double> bracket, double tol, lj::B2Method b2_method) {
    check_bracket(bracket, tol);
    // x tolerance tol * T*, scaled by the upper end of the window
    const auto root = roots::brent(f, bracket.first, bracket.second, tol * bracket.second, tol, kMaxIterations);
    FixedPointResult r;
    r.t_star = root.x;
    r.residual = root.fx;
    r.bracket = {root.low, root.high};
    r.iterations = root.iterations;
    r.converged = root.f_converged;
    r.b2_at_t = b2(root.x, b2_method);
    return r;
}

}  // namespace

double residual(lj::ReducedTemperature t, lj::DerivativeRoute route) {
    const double slope = lj::db2_dt(t, route).value;
    const double value = route == lj::DerivativeRoute::quadrature ? lj::b2_pair_oracle(t).value
                                                                  : lj::b2_integral(t).value;
    return slope - value / t.value();
}

FixedPointResult find_selfsim_fixpoint(std::pair<double, double> bracket, double tol, lj::DerivativeRoute route) {
    auto f = [route](double t) { return residual(lj::ReducedTemperature(t), route); };
    const auto method = route == lj::DerivativeRoute::quadrature ? lj::B2Method::pair_oracle : lj::B2Method::integral;
    return refine(f, bracket, tol, method);
}

FixedPointResult find_boyle(std::pair<double, double> bracket, double tol, lj::B2Method method) {
    auto f = [method](double t) { return b2(t, method); };
    return refine(f, bracket, tol, method);
}

FixedPointResult maximize_b2_over_t(std::pair<double, double> bracket, double tol) {
    // d(B2/T)/dT = (dB2/dT - B2/T) / T
    auto slope = [](double t) {
        const lj::ReducedTemperature rt(t);
        return (lj::db2_dt_quadrature(rt).value - lj::b2_pair_oracle(rt).value / t) / t;
    };
    check_bracket(bracket, tol);
    if (slope(bracket.first) <= 0.0 || slope(bracket.second) >= 0.0) {
        std::ostringstream msg;
        msg << "B2/T has no interior maximum in [" << bracket.first << ", " << bracket.second << "]";
        throw BracketError(msg.str(), bracket.first, bracket.second);
    }
    return refine(slope, bracket, tol, lj::B2Method::pair_oracle);
}

double localized_energy(double eps0, const FixedPointResult& fixpoint) {
    if (!(eps0 > 0.0)) throw DomainError("well depth eps0 must be positive");
    if (!fixpoint.converged) throw ConvergenceError("self-similarity fixed point not converged", fixpoint.t_star, 0.0);
    return fixpoint.t_star * eps0;
}

double localized_energy(double eps0) { return localized_energy(eps0, find_selfsim_fixpoint()); }

std::vector<SignChange> residual_sign_changes(double t_min, double t_max, double step) {
    if (!(step > 0.0) || !(t_min > 0.0) || !(t_min < t_max)) throw ArgumentError("invalid scan grid");
    const auto n = static_cast<std::size_t>(std::floor((t_max - t_min) / step + 1e-9));
    std::vector<SignChange> out;
    double prev_t = t_min;
    double prev_r = residual(lj::ReducedTemperature(t_min));
    for (std::size_t i = 1; i <= n; ++i) {
        const double t = t_min + static_cast<double>(i) * step;
        const double r = residual(lj::ReducedTemperature(t));
        if ((prev_r < 0.0) != (r < 0.0)) out.push_back({prev_t, t});
        prev_t = t;
        prev_r = r;
    }
    return out;
}

}  // namespace virial::selfsim
