#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

#include "virial/errors.hpp"

namespace virial::quadrature {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
    std::size_t intervals = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae on [-1, 1]).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature over the panels defined
/// by consecutive breakpoints. The panel with the largest error estimate is
/// bisected until the summed estimate drops to abs_tol or max_intervals is hit.
/// The error estimate is |K15 - G7| per panel, which over-states the true
/// error for smooth integrands.
template <class F>
Result integrate(F&& f, std::span<const double> breakpoints, double abs_tol, std::size_t max_intervals = 4000) {
    if (breakpoints.size() < 2) throw ArgumentError("quadrature needs at least two breakpoints");
    if (!(abs_tol > 0.0)) throw ArgumentError("quadrature tolerance must be positive");

    std::priority_queue<detail::Panel> panels;
    Result r;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) throw ArgumentError("quadrature breakpoints must increase");
        auto p = detail::gauss_kronrod_15(f, breakpoints[i], breakpoints[i + 1]);
        value += p.value;
        error += p.error;
        panels.push(p);
    }
    r.evaluations = 15 * panels.size();

    while (error > abs_tol && panels.size() < max_intervals) {
        const auto worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) break;  // panel at machine resolution
        panels.pop();
        const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        r.evaluations += 30;
        panels.push(left);
        panels.push(right);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
    }

    // Re-sum from scratch so the running updates do not accumulate roundoff.
    value = 0.0;
    error = 0.0;
    r.intervals = panels.size();
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    r.value = value;
    r.abs_error = error;
    r.converged = error <= abs_tol;
    return r;
}

}  // namespace virial::quadrature
