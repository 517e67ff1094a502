#ifndef FRACBOUND_SERIES_HPP
#define FRACBOUND_SERIES_HPP

#include <vector>

#include "fracbound/constants.hpp"

namespace fracbound {

/// Finite sine expansion on (0,1): coefficient m multiplies sin(m pi x),
/// m = 1..max. Vanishes at both endpoints by construction.
class SinSeries {
public:
    SinSeries() = default;
    // coeffs[i] multiplies sin((i+1) pi x)
    explicit SinSeries(std::vector<double> coeffs);

    static SinSeries mode(int m, double amplitude = 1.0);

    int max_mode() const noexcept { return static_cast<int>(coeffs_.size()); }
    double coeff(int m) const; // m >= 1; zero beyond stored length
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    double operator()(double x) const;
    double l2_norm() const;
    bool is_zero(double tol = 0.0) const;

    SinSeries& operator+=(const SinSeries& other);
    SinSeries& operator-=(const SinSeries& other);
    SinSeries& operator*=(double factor);
    friend SinSeries operator+(SinSeries a, const SinSeries& b) { return a += b; }
    friend SinSeries operator-(SinSeries a, const SinSeries& b) { return a -= b; }
    friend SinSeries operator*(double factor, SinSeries a) { return a *= factor; }

private:
    std::vector<double> coeffs_;
};

/// Finite cosine expansion on (0,1): coefficient m multiplies cos(m pi x),
/// m = 0..max (index 0 is the constant mode).
class CosSeries {
public:
    CosSeries() = default;
    // coeffs[i] multiplies cos(i pi x)
    explicit CosSeries(std::vector<double> coeffs);

    static CosSeries mode(int m, double amplitude = 1.0);

    int max_mode() const noexcept {
        return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1;
    }
    double coeff(int m) const; // m >= 0
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    double operator()(double x) const;
    double l2_norm() const;
    bool is_zero(double tol = 0.0) const;

    CosSeries& operator+=(const CosSeries& other);
    CosSeries& operator-=(const CosSeries& other);
    CosSeries& operator*=(double factor);
    friend CosSeries operator+(CosSeries a, const CosSeries& b) { return a += b; }
    friend CosSeries operator-(CosSeries a, const CosSeries& b) { return a -= b; }
    friend CosSeries operator*(double factor, CosSeries a) { return a *= factor; }

private:
    std::vector<double> coeffs_;
};

/// L2(0,1) inner products via mode orthogonality. Only same-kind pairs are
/// defined; sine-cosine products follow a different integration rule and go
/// through cross_inner below.
double inner(const SinSeries& u, const SinSeries& v);
double inner(const CosSeries& u, const CosSeries& v);

/// L2(0,1) product of a sine and a cosine expansion:
///   integral_0^1 sin(m pi x) cos(n pi x) dx = 2m / ((m^2 - n^2) pi)
/// when m + n is odd, and 0 when m + n is even. Needed once flux components
/// carry both parities (stream-function perturbations swap them).
double cross_inner(const SinSeries& u, const CosSeries& v);

/// L2(0,1) norm of the sum s(x) + c(x) of a sine and a cosine expansion.
double mixed_l2_norm(const SinSeries& s, const CosSeries& c);

/// d/dx: sin(m pi x) -> m pi cos(m pi x).
CosSeries derivative(const SinSeries& v);
/// d/dx: cos(m pi x) -> -m pi sin(m pi x).
SinSeries derivative(const CosSeries& v);

/// -d^2/dx^2, i.e. coefficient m scaled by (m pi)^2.
SinSeries neg_laplacian(const SinSeries& v);

/// Spectral fractional norm: sqrt( sum_j lambda_j^s (v, phi_j)^2 ) with the
/// normalized eigenfunctions phi_j = sqrt(2) sin(j pi x).
double fractional_norm(const SinSeries& v, FractionalOrder s,
                       const DomainSpec& domain);

/// Right-hand side family f(x) = sum_{j<=M} j^{-decay} sin(j pi x).
SinSeries build_rhs(double decay, int M, const DomainSpec& domain);

} // namespace fracbound

#endif
