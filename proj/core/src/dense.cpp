#include "fracbound/dense.hpp"

#include <cmath>
#include <string>

namespace fracbound {

namespace {

// forward/backward substitution with the lower factor L (row-major)
std::vector<double> cholesky_solve(const std::vector<double>& chol, int n,
                                   const std::vector<double>& b) {
    std::vector<double> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double acc = b[static_cast<size_t>(i)];
        for (int j = 0; j < i; ++j) {
            acc -= chol[static_cast<size_t>(i) * n + j] * y[static_cast<size_t>(j)];
        }
        y[static_cast<size_t>(i)] = acc / chol[static_cast<size_t>(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double acc = y[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            acc -= chol[static_cast<size_t>(j) * n + i] * y[static_cast<size_t>(j)];
        }
        y[static_cast<size_t>(i)] = acc / chol[static_cast<size_t>(i) * n + i];
    }
    return y;
}

} // namespace

SpdSolution solve_spd(const SymMatrix& a, const std::vector<double>& b,
                      double condition_limit) {
    const int n = a.size();
    if (static_cast<int>(b.size()) != n) {
        throw std::invalid_argument("solve_spd: dimension mismatch");
    }
    if (n == 0) return {{}, 1.0};

    std::vector<double> chol(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        for (int k = 0; k < j; ++k) {
            const double ljk = chol[static_cast<size_t>(j) * n + k];
            d -= ljk * ljk;
        }
        if (!(d > 0.0)) {
            throw DegenerateBasisError(
                "Gram matrix is not positive definite (pivot " +
                std::to_string(j) + ")");
        }
        chol[static_cast<size_t>(j) * n + j] = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double acc = a(i, j);
            for (int k = 0; k < j; ++k) {
                acc -= chol[static_cast<size_t>(i) * n + k] *
                       chol[static_cast<size_t>(j) * n + k];
            }
            chol[static_cast<size_t>(i) * n + j] =
                acc / chol[static_cast<size_t>(j) * n + j];
        }
    }

    // cond_1(A) ~ ||A||_1 * max_e ||A^{-1} e||_1 over a few probe vectors
    double norm_a = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::abs(a(i, j));
        norm_a = std::max(norm_a, col);
    }
    double norm_inv = 0.0;
    for (int probe = 0; probe < 2; ++probe) {
        std::vector<double> e(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            e[static_cast<size_t>(i)] = (probe == 0 || i % 2 == 0) ? 1.0 : -1.0;
        }
        const std::vector<double> z = cholesky_solve(chol, n, e);
        double l1 = 0.0;
        for (double v : z) l1 += std::abs(v);
        norm_inv = std::max(norm_inv, l1 / n);
    }
    const double cond = norm_a * norm_inv;
    if (cond > condition_limit) {
        throw DegenerateBasisError("Gram matrix condition estimate " +
                                   std::to_string(cond) + " exceeds limit");
    }

    SpdSolution sol;
    sol.condition_estimate = cond;
    sol.x = cholesky_solve(chol, n, b);
    return sol;
}

} // namespace fracbound
