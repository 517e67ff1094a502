#ifndef FRACBOUND_DENSE_HPP
#define FRACBOUND_DENSE_HPP

#include <vector>

#include "fracbound/errors.hpp"

namespace fracbound {

/// Dense symmetric matrix in row-major full storage; only as large as a
/// minorant basis ever gets, so no blocking or pivoting.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const noexcept { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

struct SpdSolution {
    std::vector<double> x;
    double condition_estimate = 0.0; // 1-norm estimate
};

/// Solves A x = b by Cholesky factorization. Throws DegenerateBasisError when
/// a pivot is nonpositive or the 1-norm condition estimate exceeds
/// `condition_limit`.
SpdSolution solve_spd(const SymMatrix& a, const std::vector<double>& b,
                      double condition_limit = 1e12);

} // namespace fracbound

#endif
