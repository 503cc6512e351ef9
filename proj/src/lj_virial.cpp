#include "virial/lj_virial.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "virial/errors.hpp"
#include "virial/quadrature.hpp"

namespace virial::lj {

namespace {

constexpr std::size_t kMaxIntervals = 4000;
constexpr double kFiniteDifferenceStep = 1e-6;
constexpr double kFiniteDifferenceTol = 1e-13;

void check_tol(double abs_tol) {
    if (!(abs_tol > 0.0)) throw ArgumentError("absolute tolerance must be positive");
}

std::vector<double> breakpoints(double x_min) {
    std::vector<double> pts{x_min};
    for (double x = x_min * 1.25; x < 0.95; x *= 1.25) pts.push_back(x);
    for (double x : {1.0, 1.1225, 1.3, 1.6, 2.0, 3.0, 5.0, 10.0, 20.0, kXMax})
        if (x > pts.back()) pts.push_back(x);
    return pts;
}

template <class F>
quadrature::Result run_quadrature(F&& f, double x_min, double abs_tol, const char* what) {
    const auto pts = breakpoints(x_min);
    auto r = quadrature::integrate(f, pts, abs_tol, kMaxIntervals);
    if (!r.converged) {
        std::ostringstream msg;
        msg << what << ": quadrature error " << r.abs_error << " above tolerance " << abs_tol << " after "
            << r.intervals << " panels";
        throw ConvergenceError(msg.str(), r.value, r.abs_error);
    }
    return r;
}

inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

ReducedTemperature::ReducedTemperature(double t_star) : t_star_(t_star) {
    if (!(t_star > 0.0) || !std::isfinite(t_star)) {
        std::ostringstream msg;
        msg << "reduced temperature must be positive and finite, got " << t_star;
        throw DomainError(msg.str());
    }
}

const char* to_string(B2Method m) {
    switch (m) {
        case B2Method::integral: return "integral";
        case B2Method::series: return "series";
        case B2Method::pair_oracle: return "pair_oracle";
    }
    return "unknown";
}

double reduced_potential(double x) {
    const double y = 1.0 / ipow(x, 6);
    return 4.0 * (y * y - y);
}

double lower_cutoff(ReducedTemperature t) {
    // a (y^2 - y) = E with y = x^-6, a = 4/T*
    const double a = 4.0 / t.value();
    const double y = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * kUnderflowExponent / a));
    return std::pow(y, -1.0 / 6.0);
}

B2Evaluation b2_integral(ReducedTemperature t, double abs_tol) {
    check_tol(abs_tol);
    const double a = 4.0 / t.value();
    const double x_min = lower_cutoff(t);

    auto integrand = [a](double x) {
        const double y = 1.0 / ipow(x, 6);
        return a * x * x * (12.0 * y * y - 6.0 * y) * std::exp(-a * (y * y - y));
    };
    // Reserve a sliver of the budget for the analytic pieces.
    const auto q = run_quadrature(integrand, x_min, 0.9 * abs_tol, "b2_integral");

    const double X = kXMax;
    const double tail = a * ((4.0 / 3.0) * std::pow(X, -9) - 2.0 * std::pow(X, -3)) +
                        a * a * ((6.0 / 5.0) * std::pow(X, -15) - (4.0 / 7.0) * std::pow(X, -21) -
                                 (2.0 / 3.0) * std::pow(X, -9));
    const double tail_bound = a * a * a * std::pow(X, -15) * std::exp(a * std::pow(X, -6));
    const double head_bound = x_min * 12.0 * a * std::pow(x_min, -10) * std::exp(-kUnderflowExponent);

    B2Evaluation e;
    e.value = q.value + tail;
    e.method = B2Method::integral;
    e.est_error = q.abs_error + tail_bound + head_bound;
    e.terms_or_nodes = q.evaluations;
    return e;
}

B2Evaluation b2_pair_oracle(ReducedTemperature t, double abs_tol) {
    check_tol(abs_tol);
    const double T = t.value();
    const double x_min = lower_cutoff(t);

    auto integrand = [T](double x) { return -3.0 * std::expm1(-reduced_potential(x) / T) * x * x; };
    const auto q = run_quadrature(integrand, x_min, 0.9 * abs_tol, "b2_pair_oracle");

    const double X = kXMax;
    const double head = x_min * x_min * x_min;  // exp(-u/T) ~ 0 below x_min
    const double tail = (12.0 / T) * (std::pow(X, -9) / 9.0 - std::pow(X, -3) / 3.0) -
                        (24.0 / (T * T)) * (std::pow(X, -21) / 21.0 - 2.0 * std::pow(X, -15) / 15.0 +
                                            std::pow(X, -9) / 9.0);
    const double a = 4.0 / T;
    const double tail_bound = a * a * a * std::pow(X, -15) * std::exp(a * std::pow(X, -6));
    const double head_bound = head * std::exp(-kUnderflowExponent);

    B2Evaluation e;
    e.value = head + q.value + tail;
    e.method = B2Method::pair_oracle;
    e.est_error = q.abs_error + tail_bound + head_bound;
    e.terms_or_nodes = q.evaluations;
    return e;
}

namespace {

const std::vector<double>& lj_alphas() {
    static const std::vector<double> table = specfun::SeriesCoefficients::lennard_jones(kDefaultMaxTerms + 1).alphas;
    return table;
}

// Sums the first `count` coefficients; alphas may hold one more for the
// truncation estimate.
B2Evaluation sum_series(ReducedTemperature t, const std::vector<double>& alphas, std::size_t count, double term_tol) {
    if (!(term_tol > 0.0)) throw ArgumentError("series term tolerance must be positive");
    if (count == 0) throw ArgumentError("series needs at least one coefficient");

    const double quarter = std::pow(t.value(), -0.25);
    const double step = quarter * quarter;
    double power = quarter;  // T*^-(2n+1)/4
    double sum = 0.0;
    double last = 0.0;
    std::size_t used = 0;
    while (used < count) {
        last = alphas[used] * power;
        sum += last;
        ++used;
        if (std::fabs(last) < term_tol) break;
        power *= step;
    }

    B2Evaluation e;
    e.value = sum;
    e.method = B2Method::series;
    e.terms_or_nodes = used;
    e.converged = std::fabs(last) < term_tol;
    e.est_error = std::fabs(used < alphas.size() ? alphas[used] * power * step : last);
    return e;
}

}  // namespace

B2Evaluation b2_series(ReducedTemperature t, const specfun::SeriesCoefficients& coefficients, double term_tol) {
    return sum_series(t, coefficients.alphas, coefficients.alphas.size(), term_tol);
}

B2Evaluation b2_series(ReducedTemperature t, double term_tol, std::size_t max_terms) {
    if (max_terms < 1) throw ArgumentError("max_terms must be at least 1");
    if (max_terms + 1 <= lj_alphas().size()) return sum_series(t, lj_alphas(), max_terms, term_tol);
    const auto c = specfun::SeriesCoefficients::lennard_jones(max_terms + 1);
    return sum_series(t, c.alphas, max_terms, term_tol);
}

DerivativeEvaluation db2_dt_series(ReducedTemperature t, double term_tol, std::size_t max_terms) {
    if (!(term_tol > 0.0)) throw ArgumentError("series term tolerance must be positive");
    if (max_terms < 1) throw ArgumentError("max_terms must be at least 1");
    const double T = t.value();
    const double step = 1.0 / std::sqrt(T);
    double power = std::pow(T, -1.25);  // T*^-(2n+5)/4
    double sum = 0.0;
    double last = 0.0;
    for (std::size_t n = 0; n < max_terms; ++n) {
        const double alpha = n < lj_alphas().size() ? lj_alphas()[n] : specfun::alpha_coefficient(n);
        last = alpha * (-(2.0 * static_cast<double>(n) + 1.0) / 4.0) * power;
        sum += last;
        if (std::fabs(last) < term_tol) break;
        power *= step;
    }
    return {sum, DerivativeRoute::series, std::fabs(last) < term_tol};
}

DerivativeEvaluation db2_dt_finite_difference(ReducedTemperature t) {
    const double T = t.value();
    const double h = T * kFiniteDifferenceStep;
    const double up = b2_integral(ReducedTemperature(T + h), kFiniteDifferenceTol).value;
    const double down = b2_integral(ReducedTemperature(T - h), kFiniteDifferenceTol).value;
    return {(up - down) / (2.0 * h), DerivativeRoute::finite_difference, true};
}

DerivativeEvaluation db2_dt_quadrature(ReducedTemperature t, double abs_tol) {
    check_tol(abs_tol);
    const double T = t.value();
    const double x_min = lower_cutoff(t);
    auto integrand = [T](double x) {
        const double u = reduced_potential(x);
        return u * std::exp(-u / T) * x * x;
    };
    // the prefactor 3/T^2 scales the panel tolerance
    const double scale = 3.0 / (T * T);
    const auto q = run_quadrature(integrand, x_min, 0.9 * abs_tol / scale, "db2_dt_quadrature");
    const double X = kXMax;
    const double tail = 4.0 * (std::pow(X, -9) / 9.0 - std::pow(X, -3) / 3.0) -
                        (16.0 / T) * (std::pow(X, -21) / 21.0 - 2.0 * std::pow(X, -15) / 15.0 +
                                      std::pow(X, -9) / 9.0);
    return {-scale * (q.value + tail), DerivativeRoute::quadrature, true};
}

DerivativeEvaluation db2_dt(ReducedTemperature t, DerivativeRoute route) {
    switch (route) {
        case DerivativeRoute::series: return db2_dt_series(t);
        case DerivativeRoute::finite_difference: return db2_dt_finite_difference(t);
        case DerivativeRoute::quadrature: return db2_dt_quadrature(t);
        case DerivativeRoute::automatic: break;
    }
    if (t.value() >= kSeriesMinTemperature) {
        auto s = db2_dt_series(t);
        if (s.converged) return s;
    }
    return db2_dt_finite_difference(t);
}

double db2_dt(ReducedTemperature t) { return db2_dt(t, DerivativeRoute::automatic).value; }

}  // namespace virial::lj
