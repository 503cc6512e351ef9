#include "virial/balance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

#include "virial/errors.hpp"
#include "virial/random.hpp"
#include "virial/scaling_map.hpp"

namespace virial::balance {

namespace {

struct Point {
    double x, y, z;
};

// Coordinates on [-1, 1) from 32-bit halves of the generator output, two
// per draw. The 2^-31 grid bias is orders below any reachable error bar.
class CoordinateStream {
public:
    explicit CoordinateStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return to_coordinate(spare_);
        }
        const std::uint64_t bits = rng_.next();
        spare_ = static_cast<std::uint32_t>(bits);
        have_spare_ = true;
        return to_coordinate(static_cast<std::uint32_t>(bits >> 32));
    }

private:
    static double to_coordinate(std::uint32_t u) {
        return (static_cast<double>(u) + 0.5) * 0x1.0p-31 - 1.0;
    }

    random::Xoshiro256pp rng_;
    std::uint32_t spare_ = 0;
    bool have_spare_ = false;
};

// Fills `out` with points uniform in the unit ball by rejection from the
// enclosing cube. Candidates are written unconditionally and kept by
// advancing the cursor, which avoids a data-dependent branch per draw.
void fill_ball(CoordinateStream& coords, std::vector<Point>& out) {
    const std::size_t want = out.size() - 1;  // last slot is scratch
    std::size_t n = 0;
    while (n < want) {
        const double x = coords.next();
        const double y = coords.next();
        const double z = coords.next();
        out[n] = {x, y, z};
        n += (x * x + y * y + z * z < 1.0) ? 1 : 0;
    }
}

std::uint64_t count_overlaps(std::uint64_t seed, std::uint64_t samples) {
    constexpr std::size_t kBlock = 4096;  // pairs per buffer
    CoordinateStream coords(seed);
    std::vector<Point> points(2 * kBlock + 1);
    std::uint64_t hits = 0;
    while (samples > 0) {
        const std::size_t pairs = static_cast<std::size_t>(std::min<std::uint64_t>(samples, kBlock));
        points.resize(2 * pairs + 1);
        fill_ball(coords, points);
        for (std::size_t i = 0; i < pairs; ++i) {
            const Point& a = points[2 * i];
            const Point& b = points[2 * i + 1];
            const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
            hits += (dx * dx + dy * dy + dz * dz < 1.0) ? 1u : 0u;
        }
        samples -= pairs;
    }
    return hits;
}

}  // namespace

Rational hs_b3_exact() { return Rational(5, 8); }

CascadeOrder::CascadeOrder(int i, Rational b2, Rational b3) : i_(i), b2_(std::move(b2)), b3_(std::move(b3)) {
    if (i < 1 || i > kCascadeOrders) {
        std::ostringstream msg;
        msg << "cascade order must lie in 1.." << kCascadeOrders << ", got " << i;
        throw DomainError(msg.str());
    }
    if (b2_ != Rational(3, 8)) throw DomainError("cascade B2 must be 3/8, got " + to_string(b2_));
    if (b3_ != Rational(5, 8)) throw DomainError("cascade B3 must be 5/8, got " + to_string(b3_));
}

CascadeOrder CascadeOrder::at(int i) { return CascadeOrder(i, scaling::ScalingMap().b2_star(), hs_b3_exact()); }

Rational virial_sum(const CascadeOrder& order) { return order.b2() + order.b3(); }

Rational hs_b2() { return Rational(1); }

McEstimate hs_b3_mc(std::uint64_t samples, std::uint64_t seed) {
    if (samples < kMinSamples) {
        std::ostringstream msg;
        msg << "hs_b3_mc needs at least " << kMinSamples << " samples, got " << samples;
        throw ArgumentError(msg.str());
    }

    std::array<std::uint64_t, kShards> shard_seed{};
    std::array<std::uint64_t, kShards> shard_samples{};
    random::SplitMix64 sm(seed);
    for (unsigned k = 0; k < kShards; ++k) {
        shard_seed[k] = sm.next();
        shard_samples[k] = samples / kShards + (k < samples % kShards ? 1 : 0);
    }

    std::array<std::uint64_t, kShards> hits{};
    const unsigned workers = std::max(1u, std::min(kShards, std::thread::hardware_concurrency()));
    if (workers == 1) {
        for (unsigned k = 0; k < kShards; ++k) hits[k] = count_overlaps(shard_seed[k], shard_samples[k]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (unsigned k = w; k < kShards; k += workers) hits[k] = count_overlaps(shard_seed[k], shard_samples[k]);
            });
        }
        for (auto& t : pool) t.join();
    }

    McEstimate e;
    e.samples = samples;
    e.seed = seed;
    for (auto h : hits) e.overlaps += h;
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(e.overlaps) / n;
    // floor the variance at one count so the error bar never collapses to 0
    const double variance = std::max(p * (1.0 - p), 1.0 / n) / n;
    e.estimate = 4.0 / 3.0 * p;
    e.std_error = 4.0 / 3.0 * std::sqrt(variance);
    return e;
}

}  // namespace virial::balance
