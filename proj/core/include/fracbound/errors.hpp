#ifndef FRACBOUND_ERRORS_HPP
#define FRACBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracbound {

// Parameter outside the mathematical domain of an operation
// (nonconvergent integral, invalid exponent, bad alpha split, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Operation only available at s = 1/2 called with another order.
class UnsupportedOrderError : public std::invalid_argument {
public:
    explicit UnsupportedOrderError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Requested flux cannot be completed to an equilibrated member of Y_g.
// Carries the L2 norm of the non-cancelling residual series.
class NotInYgError : public std::runtime_error {
public:
    NotInYgError(const std::string& what, double residual_norm)
        : std::runtime_error(what), residual_norm_(residual_norm) {}
    double residual_norm() const noexcept { return residual_norm_; }

private:
    double residual_norm_;
};

// Gram matrix of a minorant basis is numerically singular.
class DegenerateBasisError : public std::runtime_error {
public:
    explicit DegenerateBasisError(const std::string& what)
        : std::runtime_error(what) {}
};

// An internally assembled quantity violates a structural guarantee
// (e.g. a flux built to be divergence-free is not).
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what)
        : std::logic_error(what) {}
};

// Malformed or unknown configuration input.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fracbound

#endif
