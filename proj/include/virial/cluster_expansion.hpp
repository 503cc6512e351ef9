#pragma once

#include <cstddef>
#include <vector>

#include "virial/formal_series.hpp"
#include "virial/rational.hpp"

namespace virial::cluster {

/// Thermodynamic-limit cluster integrals (b1, b2, ..., bL) with b1 = 1 and
/// L >= 2. Construction throws DomainError on a bad normalisation.
class ClusterIntegralVector {
public:
    explicit ClusterIntegralVector(std::vector<Rational> values);

    std::size_t order() const { return values_.size(); }
    /// b_l, 1-based.
    const Rational& operator[](std::size_t l) const { return values_.at(l - 1); }
    const std::vector<Rational>& values() const { return values_; }

private:
    std::vector<Rational> values_;
};

/// Virial coefficients (B1, B2, ..., BL); B1 = 1 whenever they come from a
/// normalised cluster vector.
struct VirialVector {
    std::vector<Rational> values;

    /// B_l, 1-based.
    const Rational& operator[](std::size_t l) const { return values.at(l - 1); }
};

/// P/kT = sum_l b_l z^l, truncated at z^L.
FormalSeries pressure_series(const ClusterIntegralVector& b);

/// N/V = sum_l l b_l z^l, truncated at z^L.
FormalSeries density_series(const ClusterIntegralVector& b);

/// Coefficients B_l such that pressure = sum_l B_l density^l through the
/// common truncation of the two series. Works for any parametrisation of the
/// series in which density has a nonzero linear term.
VirialVector match_virial(const FormalSeries& pressure, const FormalSeries& density);

/// sum_l B_l density^l.
FormalSeries virial_pressure(const VirialVector& virial, const FormalSeries& density);

/// B_l from the b_l by equating the two fugacity expansions order by order;
/// gives B2 = -b2, B3 = 4 b2^2 - 2 b3, ...
VirialVector virial_from_clusters(const ClusterIntegralVector& b);

}  // namespace virial::cluster
