#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "virial/lj_virial.hpp"

namespace virial::selfsim {

/// A located root of the self-similarity residual or of B2 itself.
struct FixedPointResult {
    double t_star = 0.0;
    double b2_at_t = 0.0;
    double residual = 0.0;  // value of the function whose root was sought
    std::pair<double, double> bracket{0.0, 0.0};
    std::size_t iterations = 0;
    bool converged = false;  // |residual| <= tol
};

// Search windows and tolerance used when the caller gives none.
inline constexpr std::pair<double, double> kFixpointWindow{4.0, 12.0};
inline constexpr std::pair<double, double> kBoyleWindow{2.0, 5.0};
inline constexpr double kDefaultTol = 1e-10;

/// r(T*) = dB2/dT* - B2(T*)/T*. Zero exactly where B2/T* is stationary.
double residual(lj::ReducedTemperature t, lj::DerivativeRoute route = lj::DerivativeRoute::automatic);

/// Root of the residual inside `bracket`; stops at |r| <= tol or when the
/// bracket is narrower than tol * T*. A width stop with |r| > tol comes back
/// with converged = false.
FixedPointResult find_selfsim_fixpoint(std::pair<double, double> bracket = kFixpointWindow, double tol = kDefaultTol,
                                       lj::DerivativeRoute route = lj::DerivativeRoute::automatic);

/// Root of B2(T*) (the Boyle temperature), by either quadrature route.
FixedPointResult find_boyle(std::pair<double, double> bracket = kBoyleWindow, double tol = kDefaultTol,
                            lj::B2Method method = lj::B2Method::integral);

/// Maximiser of B2(T*)/T* over the bracket, found as the zero of its slope
/// computed entirely from the pair-form quadratures.
FixedPointResult maximize_b2_over_t(std::pair<double, double> bracket = kFixpointWindow, double tol = kDefaultTol);

/// E_c = T_g* eps0 for a converged fixed point.
double localized_energy(double eps0, const FixedPointResult& fixpoint);
double localized_energy(double eps0);

struct SignChange {
    double low;
    double high;
};

/// Grid scan of the residual; reports every interval where it changes sign.
std::vector<SignChange> residual_sign_changes(double t_min, double t_max, double step);

}  // namespace virial::selfsim
