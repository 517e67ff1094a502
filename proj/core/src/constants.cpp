#include "fracbound/constants.hpp"

#include <cmath>
#include <string>

namespace fracbound {

FractionalOrder::FractionalOrder(double s) : s_(s) {
    if (!(s > kMinOrder && s < 1.0 - kMinOrder)) {
        throw std::invalid_argument(
            "fractional order s must lie in (" + std::to_string(kMinOrder) +
            ", " + std::to_string(1.0 - kMinOrder) + "), got " +
            std::to_string(s));
    }
}

DomainSpec::DomainSpec(int max_modes) : max_modes_(max_modes) {
    if (max_modes < 1) {
        throw std::invalid_argument("mode cap must be at least 1");
    }
}

double DomainSpec::eigenvalue(int j) const {
    if (j < 1) {
        throw std::invalid_argument("eigenvalue index must be >= 1");
    }
    const double jpi = static_cast<double>(j) * M_PI;
    return jpi * jpi;
}

std::vector<double> DomainSpec::eigenvalues(int count) const {
    std::vector<double> lam(static_cast<size_t>(count));
    for (int j = 1; j <= count; ++j) {
        lam[static_cast<size_t>(j - 1)] = eigenvalue(j);
    }
    return lam;
}

namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficient set).
// Gamma(z) = sqrt(2 pi) (z + g - 1/2)^{z - 1/2} e^{-(z + g - 1/2)} A_g(z)
// with A_g(z) = c0 + sum_k c_k / (z - 1 + k). Accurate to ~15 significant
// digits for real z >= 1/2; arguments below 1/2 go through the reflection
// formula Gamma(z) Gamma(1-z) = pi / sin(pi z).
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double gamma_positive(double z) {
    // z >= 0.5 here
    double acc = kLanczosCoeff[0];
    for (int k = 1; k < 9; ++k) {
        acc += kLanczosCoeff[k] / (z - 1.0 + static_cast<double>(k));
    }
    const double t = z + kLanczosG - 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z - 0.5) * std::exp(-t) * acc;
}

} // namespace

double gamma_function(double x) {
    if (!(x > 0.0)) {
        throw DomainError("gamma_function requires a positive argument, got " +
                          std::to_string(x));
    }
    if (x < 0.5) {
        return M_PI / (std::sin(M_PI * x) * gamma_positive(1.0 - x));
    }
    return gamma_positive(x);
}

double extension_constant(FractionalOrder s) {
    const double sv = s.value();
    return std::pow(2.0, 1.0 - 2.0 * sv) * gamma_function(1.0 - sv) /
           gamma_function(sv);
}

double kappa(FractionalOrder s) {
    return 1.0 / std::sqrt(extension_constant(s));
}

double friedrichs_constant(const DomainSpec& domain) {
    return 1.0 / std::sqrt(domain.eigenvalue(1));
}

double weighted_exp_integral(double a, int k, double c) {
    const double expo = a + static_cast<double>(k) + 1.0;
    if (!(expo > 0.0)) {
        throw DomainError("weighted_exp_integral: exponent a + k + 1 = " +
                          std::to_string(expo) + " is not positive");
    }
    if (!(c > 0.0)) {
        throw DomainError("weighted_exp_integral: decay rate must be positive, got " +
                          std::to_string(c));
    }
    return gamma_function(expo) / std::pow(c, expo);
}

} // namespace fracbound
