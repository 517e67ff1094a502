#include "fracbound/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fracbound {

namespace {

void axpy(std::vector<double>& dst, const std::vector<double>& src, double sign) {
    if (src.size() > dst.size()) {
        dst.resize(src.size(), 0.0);
    }
    for (size_t i = 0; i < src.size(); ++i) {
        dst[i] += sign * src[i];
    }
}

} // namespace

SinSeries::SinSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

SinSeries SinSeries::mode(int m, double amplitude) {
    if (m < 1) {
        throw std::invalid_argument("sine mode index must be >= 1");
    }
    std::vector<double> c(static_cast<size_t>(m), 0.0);
    c.back() = amplitude;
    return SinSeries(std::move(c));
}

double SinSeries::coeff(int m) const {
    if (m < 1) {
        throw std::invalid_argument("sine mode index must be >= 1");
    }
    const size_t i = static_cast<size_t>(m - 1);
    return i < coeffs_.size() ? coeffs_[i] : 0.0;
}

double SinSeries::operator()(double x) const {
    double acc = 0.0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        acc += coeffs_[i] * std::sin(static_cast<double>(i + 1) * M_PI * x);
    }
    return acc;
}

double SinSeries::l2_norm() const { return std::sqrt(inner(*this, *this)); }

bool SinSeries::is_zero(double tol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](double c) { return std::abs(c) <= tol; });
}

SinSeries& SinSeries::operator+=(const SinSeries& other) {
    axpy(coeffs_, other.coeffs_, 1.0);
    return *this;
}

SinSeries& SinSeries::operator-=(const SinSeries& other) {
    axpy(coeffs_, other.coeffs_, -1.0);
    return *this;
}

SinSeries& SinSeries::operator*=(double factor) {
    for (double& c : coeffs_) c *= factor;
    return *this;
}

CosSeries::CosSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

CosSeries CosSeries::mode(int m, double amplitude) {
    if (m < 0) {
        throw std::invalid_argument("cosine mode index must be >= 0");
    }
    std::vector<double> c(static_cast<size_t>(m + 1), 0.0);
    c.back() = amplitude;
    return CosSeries(std::move(c));
}

double CosSeries::coeff(int m) const {
    if (m < 0) {
        throw std::invalid_argument("cosine mode index must be >= 0");
    }
    const size_t i = static_cast<size_t>(m);
    return i < coeffs_.size() ? coeffs_[i] : 0.0;
}

double CosSeries::operator()(double x) const {
    double acc = 0.0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        acc += coeffs_[i] * std::cos(static_cast<double>(i) * M_PI * x);
    }
    return acc;
}

double CosSeries::l2_norm() const { return std::sqrt(inner(*this, *this)); }

bool CosSeries::is_zero(double tol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](double c) { return std::abs(c) <= tol; });
}

CosSeries& CosSeries::operator+=(const CosSeries& other) {
    axpy(coeffs_, other.coeffs_, 1.0);
    return *this;
}

CosSeries& CosSeries::operator-=(const CosSeries& other) {
    axpy(coeffs_, other.coeffs_, -1.0);
    return *this;
}

CosSeries& CosSeries::operator*=(double factor) {
    for (double& c : coeffs_) c *= factor;
    return *this;
}

double inner(const SinSeries& u, const SinSeries& v) {
    const size_t n = std::min(u.coeffs().size(), v.coeffs().size());
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        acc += u.coeffs()[i] * v.coeffs()[i];
    }
    return 0.5 * acc;
}

double inner(const CosSeries& u, const CosSeries& v) {
    const size_t n = std::min(u.coeffs().size(), v.coeffs().size());
    if (n == 0) return 0.0;
    double acc = u.coeffs()[0] * v.coeffs()[0];
    for (size_t i = 1; i < n; ++i) {
        acc += 0.5 * u.coeffs()[i] * v.coeffs()[i];
    }
    return acc;
}

double cross_inner(const SinSeries& u, const CosSeries& v) {
    double acc = 0.0;
    for (size_t i = 0; i < u.coeffs().size(); ++i) {
        const double cu = u.coeffs()[i];
        if (cu == 0.0) continue;
        const int m = static_cast<int>(i) + 1;
        for (size_t j = 0; j < v.coeffs().size(); ++j) {
            const double cv = v.coeffs()[j];
            if (cv == 0.0) continue;
            const int n = static_cast<int>(j);
            if ((m + n) % 2 == 0) continue; // orthogonal when m + n is even
            acc += cu * cv * 2.0 * m /
                   (static_cast<double>(m) * m - static_cast<double>(n) * n) / M_PI;
        }
    }
    return acc;
}

double mixed_l2_norm(const SinSeries& s, const CosSeries& c) {
    const double sq = inner(s, s) + 2.0 * cross_inner(s, c) + inner(c, c);
    return std::sqrt(std::max(0.0, sq));
}

CosSeries derivative(const SinSeries& v) {
    std::vector<double> c(v.coeffs().size() + 1, 0.0);
    for (size_t i = 0; i < v.coeffs().size(); ++i) {
        c[i + 1] = static_cast<double>(i + 1) * M_PI * v.coeffs()[i];
    }
    return CosSeries(std::move(c));
}

SinSeries derivative(const CosSeries& v) {
    if (v.coeffs().size() <= 1) return SinSeries{};
    std::vector<double> c(v.coeffs().size() - 1, 0.0);
    for (size_t i = 1; i < v.coeffs().size(); ++i) {
        c[i - 1] = -static_cast<double>(i) * M_PI * v.coeffs()[i];
    }
    return SinSeries(std::move(c));
}

SinSeries neg_laplacian(const SinSeries& v) {
    std::vector<double> c(v.coeffs().size(), 0.0);
    for (size_t i = 0; i < v.coeffs().size(); ++i) {
        const double mpi = static_cast<double>(i + 1) * M_PI;
        c[i] = mpi * mpi * v.coeffs()[i];
    }
    return SinSeries(std::move(c));
}

double fractional_norm(const SinSeries& v, FractionalOrder s,
                       const DomainSpec& domain) {
    // (v, phi_j) = coeff_j / sqrt(2), so each mode contributes
    // lambda_j^s coeff_j^2 / 2.
    double acc = 0.0;
    for (size_t i = 0; i < v.coeffs().size(); ++i) {
        const double c = v.coeffs()[i];
        if (c == 0.0) continue;
        acc += std::pow(domain.eigenvalue(static_cast<int>(i) + 1), s.value()) *
               c * c * 0.5;
    }
    return std::sqrt(acc);
}

SinSeries build_rhs(double decay, int M, const DomainSpec& domain) {
    if (M < 1 || M > domain.max_modes()) {
        throw std::invalid_argument("build_rhs: mode count " + std::to_string(M) +
                                    " outside [1, " +
                                    std::to_string(domain.max_modes()) + "]");
    }
    std::vector<double> c(static_cast<size_t>(M));
    for (int j = 1; j <= M; ++j) {
        c[static_cast<size_t>(j - 1)] = std::pow(static_cast<double>(j), -decay);
    }
    return SinSeries(std::move(c));
}

} // namespace fracbound
