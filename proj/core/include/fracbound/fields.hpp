#ifndef FRACBOUND_FIELDS_HPP
#define FRACBOUND_FIELDS_HPP

#include <mutex>
#include <unordered_map>
#include <variant>
#include <vector>

#include "fracbound/series.hpp"

namespace fracbound {

/// One separable term xpart(x) * t^k * exp(-mu t) on Q = (0,1) x (0,inf).
/// The x-part is either a sine or a cosine expansion: scalar fields are
/// sine-pure (they vanish on the lateral boundary), but flux components mix
/// parities once stream-function perturbations enter.
struct Term {
    std::variant<SinSeries, CosSeries> xpart;
    int tpower = 0;  // k, 0..kMaxTPower
    double rate = 1.0; // mu > 0

    static constexpr int kMaxTPower = 4;

    double eval_x(double x) const;
    bool xpart_zero(double tol = 0.0) const;
};

/// A scalar function on Q stored as a finite sum of separable terms.
/// Terms with matching parity, t-power and rate (within kRateMergeTol)
/// are merged on insertion.
class SeparableComponent {
public:
    static constexpr double kRateMergeTol = 1e-14;

    void add(SinSeries xpart, int tpower, double rate);
    void add(CosSeries xpart, int tpower, double rate);
    void add(const Term& term);
    void add(const SeparableComponent& other, double factor = 1.0);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    double min_rate() const; // smallest decay rate; throws if empty
    int max_tpower() const noexcept;

    double eval(double x, double t) const;

    // value at t = 0: only k = 0 terms contribute, split by parity
    SinSeries trace_sin() const;
    CosSeries trace_cos() const;

    SeparableComponent& operator*=(double factor);
    friend SeparableComponent operator+(SeparableComponent a,
                                        const SeparableComponent& b) {
        a.add(b);
        return a;
    }
    friend SeparableComponent operator-(SeparableComponent a,
                                        const SeparableComponent& b) {
        a.add(b, -1.0);
        return a;
    }

private:
    std::vector<Term> terms_;
};

/// Scalar field in the energy class: sine-pure separable terms, so the
/// function vanishes on the lateral boundary and has a SinSeries trace.
class SeparableField {
public:
    SeparableField() = default;

    void add_term(SinSeries xpart, int tpower, double rate);
    void add(const SeparableField& other, double factor = 1.0);

    const SeparableComponent& component() const noexcept { return comp_; }
    bool empty() const noexcept { return comp_.empty(); }

    double eval(double x, double t) const { return comp_.eval(x, t); }
    SinSeries trace() const { return comp_.trace_sin(); }

    SeparableField& operator*=(double factor);
    friend SeparableField operator+(SeparableField a, const SeparableField& b) {
        a.add(b);
        return a;
    }
    friend SeparableField operator-(SeparableField a, const SeparableField& b) {
        a.add(b, -1.0);
        return a;
    }

private:
    SeparableComponent comp_;
};

/// (d+1)-component flux on Q with d = 1: x holds y_d, t holds y_{d+1}.
struct SeparableFlux {
    SeparableComponent x;
    SeparableComponent t;

    SeparableFlux& operator*=(double factor);
    friend SeparableFlux operator+(SeparableFlux a, const SeparableFlux& b);
    friend SeparableFlux operator-(SeparableFlux a, const SeparableFlux& b);
};

/// Evaluates all weighted cylinder integrals over pairs of separable terms,
/// reducing them to x-inner-products times Gamma(a+k+1)/rate^(a+k+1).
/// The Gamma cache is internally synchronized, so one integrator may be
/// shared across threads.
class GramIntegrator {
public:
    explicit GramIntegrator(FractionalOrder s);

    FractionalOrder order() const noexcept { return s_; }

    // integral_0^inf t^(exponent + ktotal) e^{-rate t} dt
    double time_integral(double exponent, int ktotal, double rate) const;

    // integral_Q t^exponent a(x,t) b(x,t) dx dt
    double weighted_inner(const SeparableComponent& a,
                          const SeparableComponent& b, double exponent) const;
    double weighted_inner(const SeparableFlux& a, const SeparableFlux& b,
                          double exponent) const;

    // sqrt(integral_Q t^exponent |a|^2)
    double weighted_norm(const SeparableComponent& a, double exponent) const;
    double weighted_norm(const SeparableFlux& a, double exponent) const;

    // ||| nabla_xt w ||| with the natural weight t^{1-2s}
    double energy_norm(const SeparableField& w) const;

private:
    FractionalOrder s_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<double, double> gamma_cache_;

    double cached_gamma(double arg) const;
};

/// Convenience wrappers constructing a throwaway integrator.
double weighted_norm(const SeparableComponent& a, double exponent);
double weighted_norm(const SeparableFlux& a, double exponent);
double weighted_inner(const SeparableComponent& a, const SeparableComponent& b,
                      double exponent);

/// nabla_xt w = { d/dx w, d/dt w } packaged in flux shape.
SeparableFlux gradient_field(const SeparableField& w);

/// div_xt y = d/dx y_x + d/dt y_t (a scalar, generally of mixed parity).
SeparableComponent divergence(const SeparableFlux& y);

/// Exact extension of the data f at s = 1/2:
///   w(x,t) = sum_j lambda_j^{-1/2} zeta_j phi_j(x) e^{-lambda_j^{1/2} t}.
/// Throws UnsupportedOrderError for any other order.
SeparableField exact_extension(const SinSeries& f, const DomainSpec& domain,
                               FractionalOrder s);

/// Spectral trial field
///   w~(x,t) = sum_{j<=N} theta_j^{-1/2} gamma_j psi_j(x) e^{-theta_j^{1/2} t}
/// with gamma_j = (f, psi_j). theta must be positive and nondecreasing.
SeparableField approx_extension(const std::vector<double>& theta,
                                const std::vector<SinSeries>& psi,
                                const SinSeries& f, int N);

/// Flux of the exact extension, p = nabla_xt w (weight is 1 at s = 1/2).
SeparableFlux exact_flux(const SeparableField& w, FractionalOrder s);

/// Divergence-free flux candidate matched to the spectral trial field:
///   y_x = sum_j Upsilon_j e^{-theta_j^{1/2} t},  Upsilon_j = gamma_j theta_j^{-1/2} grad psi_j,
///   y_t = sum_j theta_j^{-1/2} div Upsilon_j e^{-theta_j^{1/2} t}.
/// The assembled divergence is checked to vanish.
SeparableFlux candidate_flux(const std::vector<double>& theta,
                             const std::vector<SinSeries>& psi,
                             const SinSeries& f, int N, FractionalOrder s);

/// Divergence-free, trace-neutral flux perturbation from the stream function
/// chi = amplitude * sin(mode pi x) * t e^{-rate t}, as (d/dt chi, -d/dx chi).
struct StreamMode {
    double amplitude = 0.0;
    int mode = 1;
    double rate = 1.0;
};

SeparableFlux stream_flux(const StreamMode& mode);

/// Completes the x-component of `base` to an equilibrated flux:
///   y_t(x,t) = -g(x) - integral_0^t div_x y_x dt',
/// which requires the constant part of the primitive to cancel -g; otherwise
/// NotInYgError carries the residual norm. Stream modes are added first.
/// The result satisfies div_xt y = 0 and y_t(.,0) = -g, both verified.
SeparableFlux yg_flux(const SeparableFlux& base, const SinSeries& g,
                      const std::vector<StreamMode>& stream_modes);

/// Equilibration checks used by yg_flux and the hypercircle estimate.
/// Returns the verification residuals (divergence norm, trace defect norm).
struct YgResiduals {
    double divergence_norm = 0.0;
    double trace_defect_norm = 0.0;
};
YgResiduals yg_residuals(const SeparableFlux& y, const SinSeries& g);

constexpr double kYgTolerance = 1e-12;

} // namespace fracbound

#endif
