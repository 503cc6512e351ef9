#pragma once

#include <cstddef>
#include <cstdint>

#include "virial/rational.hpp"

namespace virial::balance {

inline constexpr int kCascadeOrders = 8;

/// Reduced hard-sphere third virial coefficient B3 / b0^2.
Rational hs_b3_exact();

/// One order i of the 8-level cluster cascade with its reduced B2 and B3.
/// Both are fixed (3/8 and 5/8) for every order; construction rejects
/// anything else.
class CascadeOrder {
public:
    CascadeOrder(int i, Rational b2, Rational b3);

    /// Order i with B2 taken from the scaling-map fixed point and B3 from
    /// hs_b3_exact().
    static CascadeOrder at(int i);

    int index() const { return i_; }
    const Rational& b2() const { return b2_; }
    const Rational& b3() const { return b3_; }

private:
    int i_;
    Rational b2_;
    Rational b3_;
};

/// (PV/kT_g)_i = B2 + B3.
Rational virial_sum(const CascadeOrder& order);

/// Hard-sphere B2 in units of b0; 1 by definition of b0.
Rational hs_b2();

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t overlaps = 0;
};

inline constexpr std::uint64_t kMinSamples = 1000;
inline constexpr unsigned kShards = 8;

/// Monte Carlo estimate of B3 / b0^2 for hard spheres of diameter sigma:
/// r2 and r3 are drawn uniformly in the ball of radius sigma (so that
/// f12 f13 = -1), and B3 / b0^2 = (4/3) P(|r2 - r3| < sigma).
///
/// The samples are split over kShards fixed shards; shard k draws from
/// xoshiro256++ seeded with SplitMix64(seed) output k. Shards may run on
/// separate threads; the result is bit-identical either way.
McEstimate hs_b3_mc(std::uint64_t samples, std::uint64_t seed);

}  // namespace virial::balance
