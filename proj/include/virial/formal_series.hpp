#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "virial/rational.hpp"

namespace virial {

/// Truncated power series sum_{k <= truncation} c_k z^k over exact
/// rationals. Results of binary operations keep the smaller truncation;
/// coefficients above the truncation are never formed.
class FormalSeries {
public:
    explicit FormalSeries(std::size_t truncation);
    FormalSeries(std::vector<Rational> coefficients, std::size_t truncation);

    /// The series z.
    static FormalSeries variable(std::size_t truncation);

    std::size_t truncation() const { return coefficients_.size() - 1; }
    const Rational& operator[](std::size_t degree) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// Same series read at a lower truncation.
    FormalSeries truncated(std::size_t truncation) const;

    FormalSeries operator+(const FormalSeries& o) const;
    FormalSeries operator-(const FormalSeries& o) const;
    FormalSeries operator*(const FormalSeries& o) const;
    FormalSeries operator*(const Rational& s) const;
    bool operator==(const FormalSeries& o) const;

    FormalSeries pow(std::size_t k) const;

    /// this(inner(z)); inner must have no constant term.
    FormalSeries compose(const FormalSeries& inner) const;

    /// Compositional inverse; needs c_0 = 0 and c_1 != 0.
    FormalSeries reversion() const;

    /// Substitutes z -> s z.
    FormalSeries rescale(const Rational& s) const;

    std::string to_string() const;

private:
    std::vector<Rational> coefficients_;
};

}  // namespace virial
