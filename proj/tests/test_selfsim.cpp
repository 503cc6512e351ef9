#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "virial/errors.hpp"
#include "virial/lj_virial.hpp"
#include "virial/selfsim.hpp"
#include "virial/verify.hpp"

using namespace virial;
using lj::ReducedTemperature;

namespace {

// Golden values from an independent 30-digit evaluation (mpmath findroot on
// diff(B2, T) - B2/T and on B2).
constexpr double kTg = 6.43079847224057944774219937355;
constexpr double kB2AtTg = 0.348274831903363728978448576161;
constexpr double kBoyle = 3.41792802304911285930957817598;

}  // namespace

TEST_CASE("residual changes sign across [5, 10] and is positive at the Boyle point") {
    CHECK(selfsim::residual(ReducedTemperature(5.0)) > 0.0);
    CHECK(selfsim::residual(ReducedTemperature(10.0)) < 0.0);
    const double r = selfsim::residual(ReducedTemperature(kBoyle));
    CHECK(r > 0.0);
    CHECK(std::fabs(r - lj::db2_dt(ReducedTemperature(kBoyle))) < 1e-8);
}

TEST_CASE("self-similarity fixed point") {
    const auto fp = selfsim::find_selfsim_fixpoint({4.0, 12.0}, 1e-10);
    CHECK(fp.converged);
    CHECK(fp.t_star >= 6.0);
    CHECK(fp.t_star <= 7.5);
    CHECK(fp.b2_at_t >= 0.33);
    CHECK(fp.b2_at_t <= 0.43);
    CHECK(std::fabs(fp.residual) <= 1e-10);
    CHECK(fp.bracket.first < fp.t_star);
    CHECK(fp.t_star < fp.bracket.second);
    CHECK(fp.iterations > 0);
    CHECK(std::fabs(selfsim::residual(ReducedTemperature(fp.t_star))) < 1e-10);

    CHECK(std::fabs(fp.t_star - kTg) < 1e-8);
    CHECK(std::fabs(fp.b2_at_t - kB2AtTg) < 1e-8);
    CHECK(report::kGoldenSelfSimT == doctest::Approx(kTg).epsilon(1e-14));
    CHECK(report::kGoldenSelfSimB2 == doctest::Approx(kB2AtTg).epsilon(1e-14));
}

TEST_CASE("every derivative route reproduces the golden fixed point") {
    for (auto route : {lj::DerivativeRoute::series, lj::DerivativeRoute::finite_difference,
                       lj::DerivativeRoute::quadrature}) {
        CAPTURE(static_cast<int>(route));
        // the finite-difference residual is only good to ~1e-9
        const double tol = route == lj::DerivativeRoute::finite_difference ? 1e-8 : 1e-10;
        const auto fp = selfsim::find_selfsim_fixpoint({4.0, 12.0}, tol, route);
        const bool fd = route == lj::DerivativeRoute::finite_difference;
        CHECK(std::fabs(fp.t_star - kTg) < (fd ? 1e-6 : 1e-8));
        CHECK(std::fabs(fp.b2_at_t - kB2AtTg) < (fd ? 1e-7 : 1e-8));
    }
}

TEST_CASE("fixed point is the maximiser of B2/T") {
    const auto fp = selfsim::find_selfsim_fixpoint({4.0, 12.0}, 1e-10);
    const auto mx = selfsim::maximize_b2_over_t({4.0, 12.0}, 1e-10);
    CHECK(mx.converged);
    CHECK(std::fabs(mx.t_star - fp.t_star) <= 10 * 1e-10 * fp.t_star);

    // golden-section search on B2/T itself; function-value resolution limits
    // the abscissa to ~sqrt(eps)
    auto g = [](double t) { return lj::b2_pair_oracle(ReducedTemperature(t)).value / t; };
    double a = 4.0, b = 12.0;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double gc = g(c), gd = g(d);
    while (b - a > 1e-7) {
        if (gc > gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + phi * (b - a);
            gd = g(d);
        }
    }
    CHECK(std::fabs(0.5 * (a + b) - fp.t_star) < 1e-5);
}

TEST_CASE("residual has a single root in [4, 12]") {
    const auto changes = selfsim::residual_sign_changes(4.0, 12.0, 0.1);
    REQUIRE(changes.size() == 1);
    CHECK(changes[0].low < kTg);
    CHECK(kTg < changes[0].high);
}

TEST_CASE("Boyle temperature") {
    const auto b = selfsim::find_boyle({2.0, 5.0}, 1e-10);
    CHECK(b.converged);
    CHECK(b.t_star >= 3.3);
    CHECK(b.t_star <= 3.5);
    CHECK(b.t_star > 10.0 / 3.0);
    CHECK(std::fabs(b.b2_at_t) < 1e-8);
    CHECK(std::fabs(b.t_star - kBoyle) < 1e-8);

    const auto pair = selfsim::find_boyle({2.0, 5.0}, 1e-10, lj::B2Method::pair_oracle);
    CHECK(std::fabs(pair.t_star - b.t_star) < 1e-6);
}

TEST_CASE("bracketing errors") {
    CHECK_THROWS_AS(selfsim::find_selfsim_fixpoint({7.0, 12.0}, 1e-10), BracketError);
    CHECK_THROWS_AS(selfsim::find_boyle({4.0, 5.0}, 1e-10), BracketError);
    CHECK_THROWS_AS(selfsim::find_boyle({5.0, 2.0}, 1e-10), ArgumentError);
    CHECK_THROWS_AS(selfsim::find_selfsim_fixpoint({4.0, 12.0}, 0.0), ArgumentError);
    CHECK_THROWS_AS(selfsim::maximize_b2_over_t({7.0, 12.0}, 1e-10), BracketError);
}

TEST_CASE("width fallback stops a loose search without claiming convergence") {
    const auto fp = selfsim::find_selfsim_fixpoint({4.0, 12.0}, 1e-3);
    CHECK(std::fabs(fp.t_star - kTg) < 0.05);
    CHECK(fp.converged == (std::fabs(fp.residual) <= 1e-3));
}

TEST_CASE("localized energy is linear in the well depth") {
    const auto fp = selfsim::find_selfsim_fixpoint();
    const double e1 = selfsim::localized_energy(1.0, fp);
    CHECK(std::fabs(e1 - 20.0 / 3.0) < 0.5);
    CHECK(e1 == fp.t_star);
    CHECK(selfsim::localized_energy(0.5, fp) == doctest::Approx(0.5 * e1).epsilon(1e-15));
    CHECK(selfsim::localized_energy(3.0, fp) == doctest::Approx(3.0 * e1).epsilon(1e-15));
    CHECK(selfsim::localized_energy(2.0) == doctest::Approx(2.0 * e1).epsilon(1e-12));
    CHECK_THROWS_AS(selfsim::localized_energy(0.0, fp), DomainError);
    auto bad = fp;
    bad.converged = false;
    CHECK_THROWS_AS(selfsim::localized_energy(1.0, bad), ConvergenceError);
}
