#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace virial {

/// Argument outside the mathematical domain of an operation (poles, negative
/// fugacities, unnormalized cluster vectors, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid call parameters (tolerances, sample counts, orders).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative or adaptive procedure stopped before meeting its tolerance.
/// Carries the best estimate it had at that point.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double est_error)
        : std::runtime_error(what), best_estimate_(best_estimate), est_error_(est_error) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double est_error() const noexcept { return est_error_; }

private:
    double best_estimate_;
    double est_error_;
};

/// Root search called on an interval without a sign change.
class BracketError : public std::runtime_error {
public:
    BracketError(const std::string& what, double low, double high)
        : std::runtime_error(what), low_(low), high_(high) {}

    double low() const noexcept { return low_; }
    double high() const noexcept { return high_; }

private:
    double low_;
    double high_;
};

/// Map iteration left the configured magnitude bound.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, std::size_t step)
        : std::runtime_error(what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace virial
