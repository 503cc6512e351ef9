#pragma once

#include <cstddef>
#include <optional>

#include "virial/specfun.hpp"

namespace virial::lj {

/// Reduced temperature T* = kT / eps0; always strictly positive.
class ReducedTemperature {
public:
    explicit ReducedTemperature(double t_star);
    double value() const noexcept { return t_star_; }

private:
    double t_star_;
};

enum class B2Method { integral, series, pair_oracle };

const char* to_string(B2Method m);

/// A reduced second virial coefficient B2 / b0 (b0 = 2 pi sigma^3 / 3) and
/// how it was obtained.
struct B2Evaluation {
    double value = 0.0;
    B2Method method = B2Method::integral;
    double est_error = 0.0;            // upper-bound style estimate, >= 0
    std::size_t terms_or_nodes = 0;    // series terms or quadrature nodes
    bool converged = true;             // false only for a series that hit max_terms
};

// Integration window for the quadrature routes. Below x_min(T*) the
// Boltzmann factor exp(-u/T*) is under exp(-kUnderflowExponent); beyond
// kXMax the integrand is replaced by its expansion in powers of 1/x.
inline constexpr double kUnderflowExponent = 700.0;
inline constexpr double kXMax = 50.0;
inline constexpr double kDefaultAbsTol = 1e-12;

inline constexpr double kDefaultTermTol = 1e-16;
inline constexpr std::size_t kDefaultMaxTerms = 200;

/// Lowest T* at which the series is used by default (db2_dt route selection
/// and scan tables).
inline constexpr double kSeriesMinTemperature = 1.5;

/// Reduced LJ potential u*(x) = 4 (x^-12 - x^-6).
double reduced_potential(double x);

/// Lower cut of the quadrature window at temperature t.
double lower_cutoff(ReducedTemperature t);

/// B2 from the force-weighted form
///   (4/T*) int_0^inf x^2 (12/x^12 - 6/x^6) exp(-u*(x)/T*) dx.
B2Evaluation b2_integral(ReducedTemperature t, double abs_tol = kDefaultAbsTol);

/// B2 from the standard pair form -3 int_0^inf (exp(-u*(x)/T*) - 1) x^2 dx.
B2Evaluation b2_pair_oracle(ReducedTemperature t, double abs_tol = kDefaultAbsTol);

/// Partial sum of alpha_n T*^-(2n+1)/4, stopping at the first term below
/// term_tol in magnitude or after max_terms terms.
B2Evaluation b2_series(ReducedTemperature t, double term_tol = kDefaultTermTol,
                       std::size_t max_terms = kDefaultMaxTerms);

/// Same sum with caller-supplied coefficients (max_terms is capped by the
/// coefficient count).
B2Evaluation b2_series(ReducedTemperature t, const specfun::SeriesCoefficients& coefficients,
                       double term_tol = kDefaultTermTol);

enum class DerivativeRoute { automatic, series, finite_difference, quadrature };

struct DerivativeEvaluation {
    double value = 0.0;
    DerivativeRoute route = DerivativeRoute::automatic;
    bool converged = true;
};

/// Term-wise differentiated series; converged=false when it ran out of terms.
DerivativeEvaluation db2_dt_series(ReducedTemperature t, double term_tol = kDefaultTermTol,
                                   std::size_t max_terms = kDefaultMaxTerms);

/// Central difference of b2_integral with step t * 1e-6.
DerivativeEvaluation db2_dt_finite_difference(ReducedTemperature t);

/// Quadrature of the temperature derivative of the pair form,
///   dB2/dT* = -(3/T*^2) int u*(x) exp(-u*(x)/T*) x^2 dx.
DerivativeEvaluation db2_dt_quadrature(ReducedTemperature t, double abs_tol = kDefaultAbsTol);

/// dB2/dT*: the series route for T* >= kSeriesMinTemperature when it
/// converges, the finite-difference route otherwise.
double db2_dt(ReducedTemperature t);

DerivativeEvaluation db2_dt(ReducedTemperature t, DerivativeRoute route);

}  // namespace virial::lj
