#include "virial/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "virial/errors.hpp"

namespace virial::specfun {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr std::size_t kDirectAlphaLimit = 20;

bool is_pole(double x) { return x <= 0.0 && x == std::nearbyint(x); }

void check_pole(double x) {
    if (is_pole(x)) {
        std::ostringstream msg;
        msg << "gamma: pole at x = " << x;
        throw DomainError(msg.str());
    }
}

double lanczos_sum(double z) {
    double a = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (z + static_cast<double>(k));
    return a;
}

// Gamma for x >= 1/2.
double gamma_positive(double x) {
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    const double s = std::sqrt(2.0 * std::numbers::pi) * lanczos_sum(z);
    if (x < 140.0) return s * std::pow(t, z + 0.5) * std::exp(-t);
    // split the power to delay overflow
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return s * half * (half * std::exp(-t));
}

double log_gamma_positive(double x) {
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

}  // namespace

double sin_pi(double x) {
    // r in [-1, 1], exact
    double r = x - 2.0 * std::nearbyint(0.5 * x);
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

double gamma(double x) {
    check_pole(x);
    if (x >= 0.5) return gamma_positive(x);
    return std::numbers::pi / (sin_pi(x) * gamma_positive(1.0 - x));
}

double log_abs_gamma(double x, int* sign) {
    check_pole(x);
    if (x >= 0.5) {
        if (sign) *sign = 1;
        return log_gamma_positive(x);
    }
    const double s = sin_pi(x);
    if (sign) *sign = s < 0.0 ? -1 : 1;
    return std::log(std::numbers::pi) - std::log(std::fabs(s)) - log_gamma_positive(1.0 - x);
}

double alpha_coefficient_direct(std::size_t n) {
    const double nd = static_cast<double>(n);
    double factorial = 1.0;
    for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
    return -std::numbers::sqrt2 * gamma((2.0 * nd - 1.0) / 4.0) * std::ldexp(1.0, static_cast<int>(n) - 2) / factorial;
}

double alpha_coefficient_log_space(std::size_t n) {
    const double nd = static_cast<double>(n);
    int gamma_sign = 1;
    const double log_mag = 0.5 * std::numbers::ln2 + log_abs_gamma((2.0 * nd - 1.0) / 4.0, &gamma_sign) +
                           (nd - 2.0) * std::numbers::ln2 - log_abs_gamma(nd + 1.0);
    return -static_cast<double>(gamma_sign) * std::exp(log_mag);
}

double alpha_coefficient(std::size_t n) {
    return n <= kDirectAlphaLimit ? alpha_coefficient_direct(n) : alpha_coefficient_log_space(n);
}

SeriesCoefficients SeriesCoefficients::lennard_jones(std::size_t truncation_order) {
    if (truncation_order == 0) throw ArgumentError("series truncation order must be positive");
    SeriesCoefficients c;
    c.truncation_order = truncation_order;
    c.alphas.reserve(truncation_order);
    for (std::size_t n = 0; n < truncation_order; ++n) c.alphas.push_back(alpha_coefficient(n));
    return c;
}

}  // namespace virial::specfun
