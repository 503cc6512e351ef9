#include "virial/scaling_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "virial/errors.hpp"

namespace virial::scaling {

using virial::to_string;

namespace {

Rational ipow(Rational base, int e) {
    Rational r = 1;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        if (e > 1) base *= base;
    }
    return r;
}

using Poly = std::vector<Rational>;  // dense, index = degree

Rational evaluate(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// p / (x - r), assuming p(r) = 0.
Poly deflate(const Poly& p, const Rational& r) {
    Poly q(p.size() - 1);
    Rational carry = 0;
    for (std::size_t i = p.size() - 1; i > 0; --i) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

// Clears denominators: integer polynomial with the same roots.
std::vector<Integer> integer_form(const Poly& p) {
    Integer l = 1;
    for (const auto& c : p) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(c)));
    std::vector<Integer> out;
    for (const auto& c : p) out.push_back(Integer(boost::multiprecision::numerator(c)) * (l / boost::multiprecision::denominator(c)));
    return out;
}

// Non-negative rational roots of p (with multiplicity) and the cofactor left
// after deflating them.
std::pair<std::vector<Rational>, Poly> rational_roots(Poly p) {
    std::vector<Rational> roots;
    trim(p);
    while (p.size() > 1 && p.front() == 0) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    bool found = true;
    while (found && p.size() > 1) {
        found = false;
        const auto ip = integer_form(p);
        for (const auto& num : divisors(ip.front())) {
            for (const auto& den : divisors(ip.back())) {
                const Rational r(num, den);
                if (evaluate(p, r) == 0) {
                    roots.push_back(r);
                    p = deflate(p, r);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return {roots, p};
}

Rational round_to_grid(const Rational& x, unsigned bits, bool up) {
    const Rational scaled = x * Rational(Integer(1) << bits);
    const Integer num = boost::multiprecision::numerator(scaled);
    const Integer den = boost::multiprecision::denominator(scaled);
    Integer q = num / den;  // x >= 0, so truncation is floor
    if (up && q * den != num) q += 1;
    return Rational(q, Integer(1) << bits);
}

}  // namespace

const char* to_string(Stability s) {
    switch (s) {
        case Stability::attracting: return "attracting";
        case Stability::repelling: return "repelling";
        case Stability::neutral: return "neutral";
        case Stability::divergent: return "divergent";
    }
    return "unknown";
}

ScalingMap::ScalingMap()
    : ScalingMap({{2, Rational(1, 2)}, {3, Rational(1, 3)}, {4, Rational(1, 6)}},
                 {{2, Rational(1, 4)}, {3, Rational(1, 6)}, {4, Rational(1, 12)}}) {}

ScalingMap::ScalingMap(std::vector<TrackTerm> tracks) : tracks_(std::move(tracks)) {
    for (const auto& t : tracks_) coefficients_[t.degree] += 2 * t.weight;
    validate();
}

ScalingMap::ScalingMap(std::map<int, Rational> coefficients, std::vector<TrackTerm> tracks)
    : coefficients_(std::move(coefficients)), tracks_(std::move(tracks)) {
    validate();
}

void ScalingMap::validate() const {
    if (coefficients_.empty()) throw DomainError("scaling map needs at least one term");
    std::map<int, Rational> doubled;
    for (const auto& t : tracks_) doubled[t.degree] += 2 * t.weight;
    if (doubled != coefficients_)
        throw DomainError("scaling map coefficients are not twice the track weights per degree");
    Rational sum = 0;
    for (const auto& [degree, c] : coefficients_) {
        if (degree < 1) throw DomainError("scaling map degrees must be >= 1");
        if (c <= 0) throw DomainError("scaling map coefficients must be positive");
        sum += c;
    }
    if (sum != 1) throw DomainError("scaling map coefficients must sum to 1 (f(1) = 1), got " + to_string(sum));
}

void ScalingMap::check_domain(const Rational& k) const {
    if (k < 0) throw DomainError("fugacity must be non-negative, got " + to_string(k));
}

Rational ScalingMap::apply(const Rational& k) const {
    check_domain(k);
    Rational acc = 0;
    for (const auto& [degree, c] : coefficients_) acc += c * ipow(k, degree);
    return acc;
}

Rational ScalingMap::derivative(const Rational& k) const {
    check_domain(k);
    Rational acc = 0;
    for (const auto& [degree, c] : coefficients_) acc += c * degree * ipow(k, degree - 1);
    return acc;
}

std::vector<MapFixedPoint> ScalingMap::fixed_points() const {
    Poly g(static_cast<std::size_t>(coefficients_.rbegin()->first) + 1, Rational(0));
    for (const auto& [degree, c] : coefficients_) g[static_cast<std::size_t>(degree)] += c;
    g[1] -= 1;

    auto [roots, rest] = rational_roots(g);
    trim(rest);
    if (rest.size() == 3) {
        const Rational disc = rest[1] * rest[1] - 4 * rest[0] * rest[2];
        if (disc >= 0) throw DomainError("scaling map has irrational real fixed points");
    } else if (rest.size() > 3) {
        throw DomainError("scaling map fixed-point cofactor of degree > 2 is not supported");
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    std::vector<MapFixedPoint> out;
    for (const auto& r : roots) {
        if (r < 0) continue;
        MapFixedPoint p;
        p.location = r;
        p.multiplier = derivative(r);
        const Rational m = abs(*p.multiplier);
        p.stability = m < 1 ? Stability::attracting : (m > 1 ? Stability::repelling : Stability::neutral);
        out.push_back(p);
    }
    if (coefficients_.rbegin()->first >= 2) {
        MapFixedPoint inf;
        inf.stability = Stability::divergent;
        out.push_back(inf);
    }
    return out;
}

Rational ScalingMap::critical_point() const {
    std::optional<Rational> found;
    for (const auto& p : fixed_points()) {
        if (p.at_infinity() || p.stability != Stability::repelling) continue;
        if (found) throw DomainError("scaling map has more than one finite repelling fixed point");
        found = p.location;
    }
    if (!found) throw DomainError("scaling map has no finite repelling fixed point");
    return *found;
}

Rational ScalingMap::b2_star() const { return 1 / derivative(critical_point()); }

double ScalingMap::beta_mu() const { return std::log(to_double(critical_point())); }

std::vector<Rational> ScalingMap::iterate(const Rational& k0, std::size_t n, const IterationLimits& limits) const {
    check_domain(k0);
    if (n < 1) throw ArgumentError("iteration count must be at least 1");
    std::vector<Rational> orbit{k0};
    orbit.reserve(n + 1);
    for (std::size_t step = 1; step <= n; ++step) {
        Rational next = apply(orbit.back());
        if (next > limits.magnitude_cap) {
            std::ostringstream msg;
            msg << "orbit from " << to_string(k0) << " exceeded " << to_string(limits.magnitude_cap) << " at step "
                << step;
            throw DivergenceError(msg.str(), step);
        }
        if (bit_size(next) > limits.max_bits) {
            std::ostringstream msg;
            msg << "orbit from " << to_string(k0) << " needs " << bit_size(next) << " bits at step " << step
                << " (cap " << limits.max_bits << ")";
            throw PrecisionCapError(msg.str(), step, std::move(orbit));
        }
        orbit.push_back(std::move(next));
    }
    return orbit;
}

std::vector<Enclosure> ScalingMap::iterate_enclosed(const Rational& k0, std::size_t n, unsigned precision_bits,
                                                    const Rational& magnitude_cap) const {
    check_domain(k0);
    if (n < 1) throw ArgumentError("iteration count must be at least 1");
    std::vector<Enclosure> orbit{{k0, k0}};
    orbit.reserve(n + 1);
    for (std::size_t step = 1; step <= n; ++step) {
        const auto& prev = orbit.back();
        Enclosure next{round_to_grid(apply(prev.low), precision_bits, false),
                       round_to_grid(apply(prev.high), precision_bits, true)};
        if (next.low > magnitude_cap) {
            std::ostringstream msg;
            msg << "orbit enclosure from " << to_string(k0) << " exceeded " << to_string(magnitude_cap)
                << " at step " << step;
            throw DivergenceError(msg.str(), step);
        }
        orbit.push_back(std::move(next));
    }
    return orbit;
}

}  // namespace virial::scaling
