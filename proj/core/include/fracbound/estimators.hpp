#ifndef FRACBOUND_ESTIMATORS_HPP
#define FRACBOUND_ESTIMATORS_HPP

#include <limits>
#include <optional>
#include <vector>

#include "fracbound/fields.hpp"

namespace fracbound {

/// Every error measure attached to one (trial field, flux candidate) pair.
/// Fields that require the exact solution stay NaN when it is unavailable.
struct EstimateReport {
    double s = 0.5;
    double energy_error = std::numeric_limits<double>::quiet_NaN();
    double flux_error = std::numeric_limits<double>::quiet_NaN();
    double mixed_norm = std::numeric_limits<double>::quiet_NaN();
    double majorant_t1 = std::numeric_limits<double>::quiet_NaN();
    double majorant_t2 = std::numeric_limits<double>::quiet_NaN();
    double majorant_t3 = std::numeric_limits<double>::quiet_NaN();
    double majorant = std::numeric_limits<double>::quiet_NaN();
    double minorant = std::numeric_limits<double>::quiet_NaN();
    double minorant_sq_raw = std::numeric_limits<double>::quiet_NaN();
    double identity_lhs = std::numeric_limits<double>::quiet_NaN();
    double identity_rhs = std::numeric_limits<double>::quiet_NaN();
    double alpha1 = std::numeric_limits<double>::quiet_NaN();
    double alpha2 = std::numeric_limits<double>::quiet_NaN();
};

/// J(w~) = 1/2 |||nabla_xt w~|||^2 - integral_Omega g w~(x,0) dx.
double energy_functional(const SeparableField& w_tilde, const SinSeries& g,
                         FractionalOrder s);

/// |||nabla_xt w~ - t^{2s-1} y|||. At s = 1/2 the difference stays in the
/// term algebra and is formed coefficientwise; otherwise the square expands
/// into three Gram blocks with exponents 1-2s, 0 and 2s-1.
double flux_mismatch_norm(const SeparableFlux& grad_w, const SeparableFlux& y,
                          FractionalOrder s);

struct IdentityResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0; // |lhs - rhs| / max(lhs, 1e-30)
};

/// Combined error identity: for any trial w~ and any y with finite weighted
/// divergence norm,
///   |||nabla e_w|||^2 + |||t^{2s-1} e_p|||^2
///     = |||nabla w~ - t^{2s-1} y|||^2 + 2 int_Q e_w div_xt y
///       - 2 int_Omega e_w(x,0) (g + y_t(x,0)).
/// Requires the exact extension, hence the s = 1/2 path.
IdentityResult error_identity(const SeparableField& w_tilde,
                              const SeparableFlux& y,
                              const SeparableField& w_exact, const SinSeries& g,
                              FractionalOrder s);

/// Hypercircle estimate: for equilibrated y the identity collapses and
/// |||nabla e_w|||^2 <= |||nabla w~ - t^{2s-1} y|||^2. Returns that computable
/// right-hand side; rejects y whose equilibration residuals exceed tolerance.
double hypercircle_bound(const SeparableField& w_tilde, const SeparableFlux& y,
                         const SinSeries& g, FractionalOrder s);

/// Three-term guaranteed upper bound
///   M_plus = |||nabla w~ - t^{2s-1} y||| + C_F |||t^{2s-1} div_xt y|||
///            + C_F^s kappa_s ||y_t(.,0) + g||.
EstimateReport majorant(const SeparableField& w_tilde, const SeparableFlux& y,
                        const SinSeries& g, FractionalOrder s,
                        const DomainSpec& domain);

struct MinorantValue {
    double value = 0.0;  // sqrt of the clamped quadratic
    double raw_sq = 0.0; // unclamped, may be negative
};

/// Lower bound from a test field:
///   M_minus^2 = 2 int_Q t^{1-2s} nabla w~ . nabla eta - 2 int_Omega g eta(.,0)
///               - |||nabla eta|||^2.
MinorantValue minorant(const SeparableField& w_tilde, const SeparableField& eta,
                       const SinSeries& g, FractionalOrder s);

struct MinorantOptimum {
    SeparableField eta;
    double value = 0.0;
    double raw_sq = 0.0;
    double condition_estimate = 0.0;
};

/// Maximizes the minorant quadratic over span(basis) by solving the SPD
/// normal system (energy Gram) K c = b. Empty basis yields zero.
MinorantOptimum optimize_minorant(const SeparableField& w_tilde,
                                  const std::vector<SeparableField>& basis,
                                  const SinSeries& g, FractionalOrder s);

struct TwoSidedBounds {
    double upper_rhs = 0.0;
    double lower_rhs = 0.0;
    bool has_exact = false;
    double upper_lhs = std::numeric_limits<double>::quiet_NaN();
    double lower_lhs = std::numeric_limits<double>::quiet_NaN();
    bool upper_holds = false;
    bool lower_holds = false;
};

/// Two-sided estimates of the combined primal-dual error norm:
///   (1 - a1 - a2) |||nabla e_w|||^2 + |||t^{2s-1} e_p|||^2 <= R_plus,
///   (1 + a1 + a2) |||nabla e_w|||^2 + |||t^{2s-1} e_p|||^2 >= R_minus,
/// with R_{+/-} = mixed^2 +/- (C_F^2/a1) T2^2 +/- (C_F^{2s} kappa^2/a2) T3^2.
/// Requires a1, a2 > 0 and a1 + a2 < 1. When the exact extension is passed,
/// the left-hand sides are evaluated and the inequality flags set.
TwoSidedBounds two_sided_combined(const SeparableField& w_tilde,
                                  const SeparableFlux& y, const SinSeries& g,
                                  FractionalOrder s, double alpha1,
                                  double alpha2, const DomainSpec& domain,
                                  const SeparableField* w_exact = nullptr);

/// S_N of the spectral trial pair with the natural flux choice:
///   S_N^2 = sum_jk gamma_j gamma_k / (theta_j theta_k (sqrt(theta_j)+sqrt(theta_k)))
///           * (rho_j, rho_k),   rho_j = Delta psi_j + theta_j psi_j.
double spectral_sn(const std::vector<double>& theta,
                   const std::vector<SinSeries>& psi, const SinSeries& f, int N);

/// Closed spectral form of the majorant at s = 1/2:
///   M_plus = S_N + C_F^{1/2} || sum_j gamma_j theta_j^{-1} Delta psi_j + f ||.
double spectral_majorant(const std::vector<double>& theta,
                         const std::vector<SinSeries>& psi, const SinSeries& f,
                         int N, const DomainSpec& domain);

/// Right-hand side of the single-parameter combined estimate at s = 1/2:
///   S_N^2 + (C_F / alpha) || sum_j gamma_j theta_j^{-1} Delta psi_j + f ||^2.
double spectral_a8_rhs(const std::vector<double>& theta,
                       const std::vector<SinSeries>& psi, const SinSeries& f,
                       int N, double alpha, const DomainSpec& domain);

/// True when every separable term of w is a pure exponential whose rate
/// matches the frequency content of its x-part (the trial then solves the
/// extension equation at s = 1/2, making the trace bound below two-sided).
bool satisfies_extension_equation(const SeparableField& w, double tol = 1e-12);

struct TraceBounds {
    double upper = 0.0;                // kappa_s M_plus
    std::optional<double> lower;       // kappa_s M_minus, equation-solving trials only
    std::optional<double> exact;       // ||e_u||_s when the exact trace is known
};

/// Bounds on the fractional-norm trace error ||e_u||_s driven by the
/// extension estimates; g is derived from f through the extension constant.
TraceBounds trace_error_bounds(const SeparableField& w_tilde,
                               const SeparableFlux& y,
                               const SeparableField* eta,
                               const SeparableField* w_exact, const SinSeries& f,
                               FractionalOrder s, const DomainSpec& domain);

} // namespace fracbound

#endif
