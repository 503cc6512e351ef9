#pragma once

#include <cstddef>
#include <vector>

namespace virial::specfun {

/// Real Gamma function. Lanczos approximation for x >= 1/2, reflection below.
/// Throws DomainError at the poles x = 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)|; the sign of Gamma(x) is written to *sign when given.
double log_abs_gamma(double x, int* sign = nullptr);

/// sin(pi x) with exact argument reduction.
double sin_pi(double x);

/// Coefficient alpha_n of the high-temperature expansion
///   B2*(T*) = sum_n alpha_n (1/T*)^((2n+1)/4)
/// for the Lennard-Jones 12-6 potential:
///   alpha_n = -sqrt(2) Gamma((2n-1)/4) / (2^(2-n) n!).
/// Evaluated directly for n <= 20 and in log space above.
double alpha_coefficient(std::size_t n);

/// Direct product form, finite for n <= 170 only.
double alpha_coefficient_direct(std::size_t n);

/// log-space form with the sign tracked separately.
double alpha_coefficient_log_space(std::size_t n);

struct SeriesCoefficients {
    std::vector<double> alphas;  // alpha_0 .. alpha_{N-1}
    std::size_t truncation_order = 0;

    static SeriesCoefficients lennard_jones(std::size_t truncation_order);
};

}  // namespace virial::specfun
