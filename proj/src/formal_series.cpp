#include "virial/formal_series.hpp"

#include <algorithm>

#include "virial/errors.hpp"

namespace virial {

FormalSeries::FormalSeries(std::size_t truncation) : coefficients_(truncation + 1, Rational(0)) {}

FormalSeries::FormalSeries(std::vector<Rational> coefficients, std::size_t truncation)
    : coefficients_(std::move(coefficients)) {
    coefficients_.resize(truncation + 1, Rational(0));
}

FormalSeries FormalSeries::variable(std::size_t truncation) {
    FormalSeries z(truncation);
    if (truncation >= 1) z.coefficients_[1] = 1;
    return z;
}

const Rational& FormalSeries::operator[](std::size_t degree) const {
    if (degree > truncation()) throw ArgumentError("coefficient above the series truncation requested");
    return coefficients_[degree];
}

FormalSeries FormalSeries::truncated(std::size_t t) const {
    if (t > truncation()) throw ArgumentError("cannot raise the truncation of a series");
    return FormalSeries(std::vector<Rational>(coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(t) + 1), t);
}

FormalSeries FormalSeries::operator+(const FormalSeries& o) const {
    FormalSeries r(std::min(truncation(), o.truncation()));
    for (std::size_t k = 0; k <= r.truncation(); ++k) r.coefficients_[k] = coefficients_[k] + o.coefficients_[k];
    return r;
}

FormalSeries FormalSeries::operator-(const FormalSeries& o) const { return *this + o * Rational(-1); }

FormalSeries FormalSeries::operator*(const FormalSeries& o) const {
    FormalSeries r(std::min(truncation(), o.truncation()));
    const std::size_t t = r.truncation();
    for (std::size_t i = 0; i <= t; ++i) {
        if (coefficients_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= t; ++j) r.coefficients_[i + j] += coefficients_[i] * o.coefficients_[j];
    }
    return r;
}

FormalSeries FormalSeries::operator*(const Rational& s) const {
    FormalSeries r = *this;
    for (auto& c : r.coefficients_) c *= s;
    return r;
}

bool FormalSeries::operator==(const FormalSeries& o) const {
    return truncation() == o.truncation() && coefficients_ == o.coefficients_;
}

FormalSeries FormalSeries::pow(std::size_t k) const {
    FormalSeries r(truncation());
    r.coefficients_[0] = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

FormalSeries FormalSeries::compose(const FormalSeries& inner) const {
    if (inner[0] != 0) throw DomainError("composition needs an inner series without constant term");
    const std::size_t t = std::min(truncation(), inner.truncation());
    // Horner in the inner series
    FormalSeries acc(t);
    for (std::size_t k = t + 1; k-- > 0;) {
        acc = acc * inner.truncated(t);
        acc.coefficients_[0] += coefficients_[k];
    }
    return acc;
}

FormalSeries FormalSeries::reversion() const {
    if (coefficients_[0] != 0) throw DomainError("reversion needs a series without constant term");
    if (truncation() < 1 || coefficients_[1] == 0) throw DomainError("reversion needs a nonzero linear term");
    const std::size_t t = truncation();
    // Solve this(g(w)) = w one order at a time; g_k enters at order k as c_1 g_k.
    FormalSeries g(t);
    g.coefficients_[1] = 1 / coefficients_[1];
    for (std::size_t k = 2; k <= t; ++k) {
        const FormalSeries lhs = compose(g);
        g.coefficients_[k] = -lhs.coefficients_[k] / coefficients_[1];
    }
    return g;
}

FormalSeries FormalSeries::rescale(const Rational& s) const {
    FormalSeries r = *this;
    Rational p = 1;
    for (auto& c : r.coefficients_) {
        c *= p;
        p *= s;
    }
    return r;
}

std::string FormalSeries::to_string() const {
    std::string out;
    for (std::size_t k = 0; k <= truncation(); ++k) {
        if (coefficients_[k] == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + virial::to_string(coefficients_[k]) + ")";
        if (k >= 1) out += "z";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    out += " + O(z^" + std::to_string(truncation() + 1) + ")";
    return out;
}

}  // namespace virial
