#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <utility>

#include "virial/errors.hpp"

namespace virial::roots {

struct BracketedRoot {
    double x = 0.0;
    double fx = 0.0;
    double low = 0.0;   // bracket that produced x
    double high = 0.0;
    std::size_t iterations = 0;
    bool f_converged = false;  // |f(x)| <= f_tol
};

/// Brent's method: bisection safeguarded inverse quadratic / secant steps.
/// Stops when |f| <= f_tol or the sign-change bracket is narrower than x_tol.
/// Throws BracketError without a sign change and ConvergenceError once
/// max_iterations is spent.
template <class F>
BracketedRoot brent(F&& f, double a, double b, double x_tol, double f_tol, std::size_t max_iterations = 200) {
    if (!(a < b)) throw ArgumentError("root bracket must satisfy low < high");
    double fa = f(a);
    double fb = f(b);
    if ((fa > 0.0 && fb > 0.0) || (fa < 0.0 && fb < 0.0)) {
        std::ostringstream msg;
        msg << "no sign change over [" << a << ", " << b << "]: f = " << fa << ", " << fb;
        throw BracketError(msg.str(), a, b);
    }

    BracketedRoot r;
    r.low = a;
    r.high = b;
    if (std::fabs(fa) <= f_tol || std::fabs(fb) <= f_tol) {
        const bool pick_a = std::fabs(fa) < std::fabs(fb);
        r.x = pick_a ? a : b;
        r.fx = pick_a ? fa : fb;
        r.f_converged = true;
        return r;
    }

    double c = b, fc = fb;
    double d = 0.0, e = 0.0;
    double low = a, high = b;  // interval the current b was drawn from
    for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
        if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::fabs(b) + 0.5 * x_tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || std::fabs(fb) <= f_tol) {
            r.x = b;
            r.fx = fb;
            r.low = low;
            r.high = high;
            r.iterations = iter - 1;
            r.f_converged = std::fabs(fb) <= f_tol;
            return r;
        }
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double rb = fb / fc;
                p = s * (2.0 * xm * qa * (qa - rb) - (b - a) * (rb - 1.0));
                q = (qa - 1.0) * (rb - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        low = std::fmin(b, c);
        high = std::fmax(b, c);
        a = b;
        fa = fb;
        b += std::fabs(d) > tol1 ? d : (xm >= 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    std::ostringstream msg;
    msg << "root refinement exceeded " << max_iterations << " iterations; best bracket [" << std::fmin(b, c) << ", "
        << std::fmax(b, c) << "]";
    throw ConvergenceError(msg.str(), b, std::fabs(c - b));
}

}  // namespace virial::roots
