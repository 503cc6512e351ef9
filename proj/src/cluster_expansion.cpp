#include "virial/cluster_expansion.hpp"

#include <algorithm>

#include "virial/errors.hpp"

namespace virial::cluster {

ClusterIntegralVector::ClusterIntegralVector(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw DomainError("cluster integral vector needs order L >= 2");
    if (values_.front() != 1)
        throw DomainError("cluster integrals must be normalised with b1 = 1, got b1 = " + to_string(values_.front()));
}

FormalSeries pressure_series(const ClusterIntegralVector& b) {
    std::vector<Rational> c(b.order() + 1, Rational(0));
    for (std::size_t l = 1; l <= b.order(); ++l) c[l] = b[l];
    return FormalSeries(std::move(c), b.order());
}

FormalSeries density_series(const ClusterIntegralVector& b) {
    std::vector<Rational> c(b.order() + 1, Rational(0));
    for (std::size_t l = 1; l <= b.order(); ++l) c[l] = Rational(static_cast<long long>(l)) * b[l];
    return FormalSeries(std::move(c), b.order());
}

VirialVector match_virial(const FormalSeries& pressure, const FormalSeries& density) {
    const std::size_t order = std::min(pressure.truncation(), density.truncation());
    if (order < 1) throw ArgumentError("virial matching needs truncation >= 1");
    if (pressure[0] != 0 || density[0] != 0) throw DomainError("fugacity series must vanish at z = 0");
    if (density[1] == 0) throw DomainError("density series needs a nonzero linear term");

    const FormalSeries n = density.truncated(order);
    const FormalSeries p = pressure.truncated(order);

    // powers[l] = n^l; B_l first appears at z^l with coefficient n_1^l
    std::vector<FormalSeries> powers;
    powers.reserve(order + 1);
    powers.push_back(n.pow(0));
    for (std::size_t l = 1; l <= order; ++l) powers.push_back(powers.back() * n);

    VirialVector v;
    v.values.reserve(order);
    for (std::size_t k = 1; k <= order; ++k) {
        Rational rhs = p[k];
        for (std::size_t l = 1; l < k; ++l) rhs -= v.values[l - 1] * powers[l][k];
        v.values.push_back(rhs / powers[k][k]);
    }
    return v;
}

FormalSeries virial_pressure(const VirialVector& virial, const FormalSeries& density) {
    FormalSeries acc(density.truncation());
    FormalSeries power = density.pow(0);
    for (const auto& coefficient : virial.values) {
        power = power * density;
        acc = acc + power * coefficient;
    }
    return acc;
}

VirialVector virial_from_clusters(const ClusterIntegralVector& b) {
    return match_virial(pressure_series(b), density_series(b));
}

}  // namespace virial::cluster
