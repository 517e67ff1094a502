#ifndef FRACBOUND_CONSTANTS_HPP
#define FRACBOUND_CONSTANTS_HPP

#include <vector>

#include "fracbound/errors.hpp"

namespace fracbound {

/// Fractional order s of the spectral operator, restricted to
/// (kMinOrder, 1 - kMinOrder). The endpoints are excluded because the
/// trace constant kappa_s blows up as s -> 0 and the extension weight
/// t^{1-2s} becomes unsummable as s -> 1.
class FractionalOrder {
public:
    static constexpr double kMinOrder = 1e-3;

    explicit FractionalOrder(double s);

    double value() const noexcept { return s_; }

    // weight exponent of the extension cylinder, 1 - 2s
    double weight_exponent() const noexcept { return 1.0 - 2.0 * s_; }
    // exponent appearing in flux/divergence norms, 2s - 1
    double dual_weight_exponent() const noexcept { return 2.0 * s_ - 1.0; }

    bool is_half() const noexcept { return s_ == 0.5; }

private:
    double s_;
};

/// The interval Omega = (0,1) with Dirichlet-Laplacian eigenpairs
/// lambda_j = j^2 pi^2, phi_j = sqrt(2) sin(j pi x), and the mode cap
/// for every trigonometric series in the system.
class DomainSpec {
public:
    static constexpr int kDefaultMaxModes = 64;

    explicit DomainSpec(int max_modes = kDefaultMaxModes);

    int max_modes() const noexcept { return max_modes_; }

    // j-th Dirichlet eigenvalue, j >= 1
    double eigenvalue(int j) const;
    std::vector<double> eigenvalues(int count) const;

private:
    int max_modes_;
};

/// Gamma function on (0, +inf), Lanczos approximation (g = 7, 9 terms,
/// coefficients tabulated in constants.cpp), reflection below 1/2.
/// Relative accuracy better than 1e-13 over the range used here.
double gamma_function(double x);

/// Extension constant C_s = 2^{1-2s} Gamma(1-s) / Gamma(s).
double extension_constant(FractionalOrder s);

/// Trace constant kappa_s = C_s^{-1/2}.
double kappa(FractionalOrder s);

/// Friedrichs constant of the domain, C_F = lambda_1^{-1/2}.
double friedrichs_constant(const DomainSpec& domain);

/// Closed form of the time integrals behind every cylinder norm:
///   integral_0^inf t^(a+k) e^{-ct} dt = Gamma(a+k+1) / c^(a+k+1).
/// Requires a + k + 1 > 0 and c > 0; throws DomainError otherwise.
double weighted_exp_integral(double a, int k, double c);

} // namespace fracbound

#endif
