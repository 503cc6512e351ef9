#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "virial/errors.hpp"
#include "virial/specfun.hpp"

using namespace virial;

namespace {

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

// Closed form with the power of two folded differently from the library:
// alpha_n = -2^(n + 1/2) Gamma((2n-1)/4) / (4 n!), Gamma from libm.
double alpha_reference(int n) {
    return -std::pow(2.0, n + 0.5) * std::tgamma((2.0 * n - 1.0) / 4.0) / (4.0 * std::tgamma(n + 1.0));
}

}  // namespace

TEST_CASE("gamma at reference points") {
    CHECK(rel_err(specfun::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-12);
    CHECK(rel_err(specfun::gamma(0.5), 1.7724538509055160) < 1e-12);
    CHECK(rel_err(specfun::gamma(5.0), 24.0) < 1e-12);
    CHECK(rel_err(specfun::gamma(-0.25), -4.9016668098607104) < 1e-12);
    // 30-digit reference: Gamma(3/4) = 1.22541670246517764512909830336
    CHECK(rel_err(specfun::gamma(0.75), 1.22541670246517764512909830336) < 1e-12);
    CHECK(rel_err(specfun::gamma(-0.25), -4.0 * specfun::gamma(0.75)) < 1e-13);
}

TEST_CASE("gamma matches libm over [-30, 30] away from poles") {
    double worst = 0.0;
    for (double x = -30.0; x <= 30.0; x += 0.0137) {
        const double frac = std::fabs(x - std::nearbyint(x));
        if (x <= 0.0 && frac < 1e-3) continue;
        worst = std::fmax(worst, rel_err(specfun::gamma(x), std::tgamma(x)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("gamma poles are domain errors naming the argument") {
    for (double x : {0.0, -1.0, -2.0, -17.0}) CHECK_THROWS_AS(specfun::gamma(x), DomainError);
    try {
        specfun::gamma(-3.0);
        FAIL("no throw");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("-3") != std::string::npos);
    }
}

TEST_CASE("reflection and recurrence identities") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = 0.001 + 0.998 * unit(rng);
        const double lhs = specfun::gamma(x) * specfun::gamma(1.0 - x) * std::sin(std::numbers::pi * x) / std::numbers::pi;
        CHECK(std::fabs(lhs - 1.0) < 1e-11);
    }
    std::uniform_real_distribution<double> wide(-5.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double x = wide(rng);
        if (std::fabs(x - std::nearbyint(x)) < 1e-3 && x < 0.5) continue;
        CHECK(rel_err(specfun::gamma(x + 1.0), x * specfun::gamma(x)) < 1e-11);
    }
}

TEST_CASE("log_abs_gamma carries the sign") {
    int sign = 0;
    const double lg = specfun::log_abs_gamma(-0.25, &sign);
    CHECK(sign == -1);
    CHECK(std::fabs(lg - std::log(4.9016668098607104)) < 1e-13);
    CHECK(std::fabs(specfun::log_abs_gamma(101.0) - std::lgamma(101.0)) < 1e-11);
    CHECK(std::fabs(specfun::log_abs_gamma(-2.5, &sign) - std::lgamma(-2.5)) < 1e-12);
    CHECK(sign == -1);
}

TEST_CASE("sin_pi reduces exactly") {
    CHECK(specfun::sin_pi(1.0) == 0.0);
    CHECK(specfun::sin_pi(-7.0) == 0.0);
    CHECK(specfun::sin_pi(0.5) == doctest::Approx(1.0).epsilon(1e-16));
    CHECK(specfun::sin_pi(1e6 + 0.5) == doctest::Approx(1.0).epsilon(1e-16));
}

TEST_CASE("alpha coefficients") {
    // 30-digit references from the defining Gamma expression
    CHECK(rel_err(specfun::alpha_coefficient(0), 1.73300092018476996288944398611) < 1e-12);
    CHECK(rel_err(specfun::alpha_coefficient(1), -2.56369335204084757294842020474) < 1e-12);
    CHECK(rel_err(specfun::alpha_coefficient(2), -0.866500460092384981444721993055) < 1e-12);
    CHECK(rel_err(specfun::alpha_coefficient(30), -6.40738297275997457349203650944e-14) < 1e-12);

    for (int n = 0; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(rel_err(specfun::alpha_coefficient(static_cast<std::size_t>(n)), alpha_reference(n)) < 1e-12);
    }
}

TEST_CASE("direct and log-space alpha agree") {
    for (std::size_t n = 0; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(rel_err(specfun::alpha_coefficient_log_space(n), specfun::alpha_coefficient_direct(n)) < 1e-12);
    }
}

TEST_CASE("series coefficients: sign pattern and finiteness") {
    const auto c = specfun::SeriesCoefficients::lennard_jones(400);
    REQUIRE(c.alphas.size() == 400);
    CHECK(c.truncation_order == 400);
    CHECK(c.alphas[0] > 0.0);
    // Gamma((2n-1)/4) > 0 for n >= 1, so every later coefficient is negative
    for (std::size_t n = 1; n < c.alphas.size(); ++n) {
        CAPTURE(n);
        CHECK(std::signbit(c.alphas[n]));
        CHECK(std::isfinite(c.alphas[n]));
    }
    CHECK(std::fabs(c.alphas[399]) < 1e-100);
    CHECK_THROWS_AS(specfun::SeriesCoefficients::lennard_jones(0), ArgumentError);
}
