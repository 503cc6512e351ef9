#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "virial/rational.hpp"

namespace virial::scaling {

/// One track contribution on the (1/2) K_{i+1} side of the recursion.
struct TrackTerm {
    int degree;
    Rational weight;
};

enum class Stability { attracting, repelling, neutral, divergent };

const char* to_string(Stability s);

struct MapFixedPoint {
    std::optional<Rational> location;    // empty: the point at infinity
    std::optional<Rational> multiplier;  // f'(location), finite points only
    Stability stability = Stability::neutral;

    bool at_infinity() const { return !location.has_value(); }
};

struct IterationLimits {
    Rational magnitude_cap{Integer(1000000000000)};  // |K| bound before a divergence signal
    std::size_t max_bits = 1u << 16;                  // numerator/denominator size bound
};

/// An exact orbit whose rationals outgrew IterationLimits::max_bits.
class PrecisionCapError : public std::runtime_error {
public:
    PrecisionCapError(const std::string& what, std::size_t step, std::vector<Rational> partial)
        : std::runtime_error(what), step_(step), partial_(std::move(partial)) {}

    std::size_t step() const noexcept { return step_; }
    const std::vector<Rational>& partial_orbit() const noexcept { return partial_; }

private:
    std::size_t step_;
    std::vector<Rational> partial_;
};

/// Closed rational interval guaranteed to contain an orbit point.
struct Enclosure {
    Rational low;
    Rational high;
};

/// Fugacity recursion K_{i+1} = f(K_i) with f a polynomial with exact
/// rational coefficients. The default map is
///   (1/2) K_{i+1} = (1/4) K^2 + (1/6) K^3 + (1/12) K^4,
/// i.e. f(K) = K^2/2 + K^3/3 + K^4/6.
class ScalingMap {
public:
    ScalingMap();

    /// Coefficients are twice the per-degree sums of the track weights.
    explicit ScalingMap(std::vector<TrackTerm> tracks);

    /// Both views given; throws DomainError unless they agree, every
    /// coefficient is positive, and the coefficients sum to 1.
    ScalingMap(std::map<int, Rational> coefficients, std::vector<TrackTerm> tracks);

    const std::map<int, Rational>& coefficients() const { return coefficients_; }
    const std::vector<TrackTerm>& track_terms() const { return tracks_; }

    Rational apply(const Rational& k) const;
    Rational derivative(const Rational& k) const;

    /// Non-negative real fixed points, ascending, followed by infinity.
    /// Finite points come from exact factorisation of f(K) - K.
    std::vector<MapFixedPoint> fixed_points() const;

    /// The unique finite repelling fixed point K_c.
    Rational critical_point() const;

    /// B2* = dK_i/dK_{i+1} at K_c = 1 / f'(K_c).
    Rational b2_star() const;

    /// beta * mu = ln K_c.
    double beta_mu() const;

    /// Exact orbit [k0, f(k0), ..., f^n(k0)]. Throws DivergenceError when
    /// an iterate exceeds limits.magnitude_cap and PrecisionCapError when its
    /// representation exceeds limits.max_bits.
    std::vector<Rational> iterate(const Rational& k0, std::size_t n, const IterationLimits& limits = {}) const;

    /// Rigorous enclosures of the same orbit with endpoints rounded outward
    /// to multiples of 2^-precision_bits (f is increasing on K >= 0).
    std::vector<Enclosure> iterate_enclosed(const Rational& k0, std::size_t n, unsigned precision_bits = 64,
                                            const Rational& magnitude_cap = Rational(Integer(1000000000000))) const;

private:
    void validate() const;
    void check_domain(const Rational& k) const;

    std::map<int, Rational> coefficients_;
    std::vector<TrackTerm> tracks_;
};

}  // namespace virial::scaling
