#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "virial/errors.hpp"
#include "virial/quadrature.hpp"

using namespace virial;

TEST_CASE("polynomials up to degree 22 are exact on one panel") {
    const std::array<double, 2> ab{0.0, 2.0};
    for (int k = 0; k <= 22; ++k) {
        auto f = [k](double x) { return std::pow(x, k); };
        const auto r = quadrature::integrate(f, ab, 1e-300, 1);
        CAPTURE(k);
        CHECK(r.value == doctest::Approx(std::pow(2.0, k + 1) / (k + 1)).epsilon(1e-14));
    }
}

TEST_CASE("adaptive refinement meets the tolerance on a peaked integrand") {
    auto f = [](double x) { return 1.0 / (1e-4 + (x - 0.3) * (x - 0.3)); };
    const std::array<double, 2> ab{0.0, 1.0};
    const auto r = quadrature::integrate(f, ab, 1e-10);
    const double exact = 100.0 * (std::atan(0.7 / 1e-2) + std::atan(0.3 / 1e-2));
    CHECK(r.converged);
    CHECK(std::fabs(r.value - exact) <= r.abs_error + 1e-12);
    CHECK(std::fabs(r.value - exact) < 1e-10);
    CHECK(r.intervals > 1);
    CHECK(r.evaluations == 15 * (2 * r.intervals - 1));
}

TEST_CASE("breakpoints split the range") {
    const std::array<double, 4> pts{0.0, 1.0, 2.0, std::numbers::pi};
    const auto r = quadrature::integrate([](double x) { return std::sin(x); }, pts, 1e-13);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("budget exhaustion is reported, not hidden") {
    const std::array<double, 2> ab{0.0, 1.0};
    const auto r = quadrature::integrate([](double x) { return 1.0 / std::sqrt(x + 1e-12); }, ab, 1e-15, 8);
    CHECK_FALSE(r.converged);
    CHECK(r.intervals == 8);
}

TEST_CASE("argument validation") {
    const std::array<double, 1> one{0.0};
    const std::array<double, 2> reversed{1.0, 0.0};
    const std::array<double, 2> ok{0.0, 1.0};
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(quadrature::integrate(f, one, 1e-8), ArgumentError);
    CHECK_THROWS_AS(quadrature::integrate(f, reversed, 1e-8), ArgumentError);
    CHECK_THROWS_AS(quadrature::integrate(f, ok, 0.0), ArgumentError);
}
