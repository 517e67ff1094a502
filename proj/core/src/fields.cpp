#include "fracbound/fields.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fracbound {

namespace {

bool same_parity(const Term& a, const Term& b) {
    return a.xpart.index() == b.xpart.index();
}

double xpart_inner(const Term& a, const Term& b) {
    if (std::holds_alternative<SinSeries>(a.xpart)) {
        if (std::holds_alternative<SinSeries>(b.xpart)) {
            return inner(std::get<SinSeries>(a.xpart), std::get<SinSeries>(b.xpart));
        }
        return cross_inner(std::get<SinSeries>(a.xpart), std::get<CosSeries>(b.xpart));
    }
    if (std::holds_alternative<SinSeries>(b.xpart)) {
        return cross_inner(std::get<SinSeries>(b.xpart), std::get<CosSeries>(a.xpart));
    }
    return inner(std::get<CosSeries>(a.xpart), std::get<CosSeries>(b.xpart));
}

void validate_term(int tpower, double rate) {
    if (tpower < 0 || tpower > Term::kMaxTPower) {
        throw std::invalid_argument("term t-power must lie in [0, " +
                                    std::to_string(Term::kMaxTPower) + "], got " +
                                    std::to_string(tpower));
    }
    if (!(rate > 0.0)) {
        throw std::invalid_argument("term decay rate must be positive, got " +
                                    std::to_string(rate));
    }
}

constexpr double kFactorial[Term::kMaxTPower + 1] = {1.0, 1.0, 2.0, 6.0, 24.0};

} // namespace

double Term::eval_x(double x) const {
    return std::visit([x](const auto& series) { return series(x); }, xpart);
}

bool Term::xpart_zero(double tol) const {
    return std::visit([tol](const auto& series) { return series.is_zero(tol); },
                      xpart);
}

void SeparableComponent::add(const Term& term) {
    validate_term(term.tpower, term.rate);
    if (term.xpart_zero()) return;
    for (Term& existing : terms_) {
        if (same_parity(existing, term) && existing.tpower == term.tpower &&
            std::abs(existing.rate - term.rate) <= kRateMergeTol) {
            if (std::holds_alternative<SinSeries>(existing.xpart)) {
                std::get<SinSeries>(existing.xpart) += std::get<SinSeries>(term.xpart);
            } else {
                std::get<CosSeries>(existing.xpart) += std::get<CosSeries>(term.xpart);
            }
            return;
        }
    }
    terms_.push_back(term);
}

void SeparableComponent::add(SinSeries xpart, int tpower, double rate) {
    add(Term{std::move(xpart), tpower, rate});
}

void SeparableComponent::add(CosSeries xpart, int tpower, double rate) {
    add(Term{std::move(xpart), tpower, rate});
}

void SeparableComponent::add(const SeparableComponent& other, double factor) {
    for (const Term& term : other.terms_) {
        Term scaled = term;
        std::visit([factor](auto& series) { series *= factor; }, scaled.xpart);
        add(scaled);
    }
}

double SeparableComponent::min_rate() const {
    if (terms_.empty()) {
        throw std::logic_error("min_rate of an empty component");
    }
    double r = terms_.front().rate;
    for (const Term& term : terms_) r = std::min(r, term.rate);
    return r;
}

int SeparableComponent::max_tpower() const noexcept {
    int k = 0;
    for (const Term& term : terms_) k = std::max(k, term.tpower);
    return k;
}

double SeparableComponent::eval(double x, double t) const {
    double acc = 0.0;
    for (const Term& term : terms_) {
        double tw = std::exp(-term.rate * t);
        for (int i = 0; i < term.tpower; ++i) tw *= t;
        acc += term.eval_x(x) * tw;
    }
    return acc;
}

SinSeries SeparableComponent::trace_sin() const {
    SinSeries result;
    for (const Term& term : terms_) {
        if (term.tpower == 0 && std::holds_alternative<SinSeries>(term.xpart)) {
            result += std::get<SinSeries>(term.xpart);
        }
    }
    return result;
}

CosSeries SeparableComponent::trace_cos() const {
    CosSeries result;
    for (const Term& term : terms_) {
        if (term.tpower == 0 && std::holds_alternative<CosSeries>(term.xpart)) {
            result += std::get<CosSeries>(term.xpart);
        }
    }
    return result;
}

SeparableComponent& SeparableComponent::operator*=(double factor) {
    for (Term& term : terms_) {
        std::visit([factor](auto& series) { series *= factor; }, term.xpart);
    }
    return *this;
}

void SeparableField::add_term(SinSeries xpart, int tpower, double rate) {
    comp_.add(std::move(xpart), tpower, rate);
}

void SeparableField::add(const SeparableField& other, double factor) {
    comp_.add(other.comp_, factor);
}

SeparableField& SeparableField::operator*=(double factor) {
    comp_ *= factor;
    return *this;
}

SeparableFlux& SeparableFlux::operator*=(double factor) {
    x *= factor;
    t *= factor;
    return *this;
}

SeparableFlux operator+(SeparableFlux a, const SeparableFlux& b) {
    a.x.add(b.x);
    a.t.add(b.t);
    return a;
}

SeparableFlux operator-(SeparableFlux a, const SeparableFlux& b) {
    a.x.add(b.x, -1.0);
    a.t.add(b.t, -1.0);
    return a;
}

GramIntegrator::GramIntegrator(FractionalOrder s) : s_(s) {}

double GramIntegrator::cached_gamma(double arg) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = gamma_cache_.find(arg);
    if (it != gamma_cache_.end()) return it->second;
    const double value = gamma_function(arg);
    gamma_cache_.emplace(arg, value);
    return value;
}

double GramIntegrator::time_integral(double exponent, int ktotal,
                                     double rate) const {
    const double expo = exponent + static_cast<double>(ktotal) + 1.0;
    if (!(expo > 0.0)) {
        throw DomainError("time integral diverges: weight exponent " +
                          std::to_string(exponent) + " with t-power " +
                          std::to_string(ktotal));
    }
    if (!(rate > 0.0)) {
        throw DomainError("time integral requires a positive combined rate");
    }
    return cached_gamma(expo) / std::pow(rate, expo);
}

double GramIntegrator::weighted_inner(const SeparableComponent& a,
                                      const SeparableComponent& b,
                                      double exponent) const {
    double acc = 0.0;
    for (size_t i = 0; i < a.terms().size(); ++i) {
        const Term& ta = a.terms()[i];
        for (size_t j = 0; j < b.terms().size(); ++j) {
            const Term& tb = b.terms()[j];
            const double xin = xpart_inner(ta, tb);
            if (xin == 0.0) continue;
            const double expo =
                exponent + static_cast<double>(ta.tpower + tb.tpower) + 1.0;
            if (!(expo > 0.0)) {
                throw DomainError(
                    "divergent term pair (" + std::to_string(i) + "," +
                    std::to_string(j) + "): t-powers " + std::to_string(ta.tpower) +
                    "+" + std::to_string(tb.tpower) + " with weight exponent " +
                    std::to_string(exponent));
            }
            acc += xin * time_integral(exponent, ta.tpower + tb.tpower,
                                       ta.rate + tb.rate);
        }
    }
    return acc;
}

double GramIntegrator::weighted_inner(const SeparableFlux& a,
                                      const SeparableFlux& b,
                                      double exponent) const {
    return weighted_inner(a.x, b.x, exponent) + weighted_inner(a.t, b.t, exponent);
}

double GramIntegrator::weighted_norm(const SeparableComponent& a,
                                     double exponent) const {
    return std::sqrt(std::max(0.0, weighted_inner(a, a, exponent)));
}

double GramIntegrator::weighted_norm(const SeparableFlux& a,
                                     double exponent) const {
    return std::sqrt(std::max(0.0, weighted_inner(a, a, exponent)));
}

double GramIntegrator::energy_norm(const SeparableField& w) const {
    return weighted_norm(gradient_field(w), s_.weight_exponent());
}

double weighted_norm(const SeparableComponent& a, double exponent) {
    return GramIntegrator(FractionalOrder(0.5)).weighted_norm(a, exponent);
}

double weighted_norm(const SeparableFlux& a, double exponent) {
    return GramIntegrator(FractionalOrder(0.5)).weighted_norm(a, exponent);
}

double weighted_inner(const SeparableComponent& a, const SeparableComponent& b,
                      double exponent) {
    return GramIntegrator(FractionalOrder(0.5)).weighted_inner(a, b, exponent);
}

SeparableFlux gradient_field(const SeparableField& w) {
    SeparableFlux grad;
    for (const Term& term : w.component().terms()) {
        const SinSeries& xpart = std::get<SinSeries>(term.xpart);
        grad.x.add(derivative(xpart), term.tpower, term.rate);
        // (t^k e^{-mu t})' = k t^{k-1} e^{-mu t} - mu t^k e^{-mu t}
        if (term.tpower >= 1) {
            grad.t.add(static_cast<double>(term.tpower) * xpart, term.tpower - 1,
                       term.rate);
        }
        grad.t.add(-term.rate * xpart, term.tpower, term.rate);
    }
    return grad;
}

namespace {

void add_x_derivative(SeparableComponent& out, const Term& term, double sign) {
    if (std::holds_alternative<SinSeries>(term.xpart)) {
        out.add(sign * derivative(std::get<SinSeries>(term.xpart)), term.tpower,
                term.rate);
    } else {
        SinSeries d = derivative(std::get<CosSeries>(term.xpart));
        out.add(sign * d, term.tpower, term.rate);
    }
}

void add_t_derivative(SeparableComponent& out, const Term& term) {
    if (term.tpower >= 1) {
        Term shifted = term;
        std::visit(
            [&term](auto& series) { series *= static_cast<double>(term.tpower); },
            shifted.xpart);
        shifted.tpower = term.tpower - 1;
        out.add(shifted);
    }
    Term damped = term;
    std::visit([&term](auto& series) { series *= -term.rate; }, damped.xpart);
    out.add(damped);
}

} // namespace

SeparableComponent divergence(const SeparableFlux& y) {
    SeparableComponent div;
    for (const Term& term : y.x.terms()) {
        add_x_derivative(div, term, 1.0);
    }
    for (const Term& term : y.t.terms()) {
        add_t_derivative(div, term);
    }
    return div;
}

SeparableField exact_extension(const SinSeries& f, const DomainSpec& domain,
                               FractionalOrder s) {
    if (!s.is_half()) {
        throw UnsupportedOrderError(
            "exact_extension is available only at s = 1/2");
    }
    if (f.max_mode() > domain.max_modes()) {
        throw std::invalid_argument("data exceeds the domain mode cap");
    }
    SeparableField w;
    for (int j = 1; j <= f.max_mode(); ++j) {
        const double fj = f.coeff(j);
        if (fj == 0.0) continue;
        const double mu = std::sqrt(domain.eigenvalue(j));
        w.add_term(SinSeries::mode(j, fj / mu), 0, mu);
    }
    return w;
}

namespace {

void validate_spectral_inputs(const std::vector<double>& theta,
                              const std::vector<SinSeries>& psi, int N) {
    if (N < 0) {
        throw std::invalid_argument("mode count N must be nonnegative");
    }
    if (static_cast<int>(theta.size()) < N || static_cast<int>(psi.size()) < N) {
        throw std::invalid_argument("need at least N approximate eigenpairs");
    }
    for (int j = 0; j < N; ++j) {
        if (!(theta[static_cast<size_t>(j)] > 0.0)) {
            throw std::invalid_argument("approximate eigenvalues must be positive");
        }
        if (j > 0 && theta[static_cast<size_t>(j)] < theta[static_cast<size_t>(j - 1)]) {
            throw std::invalid_argument(
                "approximate eigenvalues must be nondecreasing");
        }
    }
}

} // namespace

SeparableField approx_extension(const std::vector<double>& theta,
                                const std::vector<SinSeries>& psi,
                                const SinSeries& f, int N) {
    validate_spectral_inputs(theta, psi, N);
    SeparableField w;
    for (int j = 0; j < N; ++j) {
        const double mu = std::sqrt(theta[static_cast<size_t>(j)]);
        const double gamma_j = inner(f, psi[static_cast<size_t>(j)]);
        if (gamma_j == 0.0) continue;
        w.add_term((gamma_j / mu) * psi[static_cast<size_t>(j)], 0, mu);
    }
    return w;
}

SeparableFlux exact_flux(const SeparableField& w, FractionalOrder s) {
    if (!s.is_half()) {
        throw UnsupportedOrderError(
            "exact_flux leaves the separable representation for s != 1/2");
    }
    return gradient_field(w);
}

SeparableFlux candidate_flux(const std::vector<double>& theta,
                             const std::vector<SinSeries>& psi,
                             const SinSeries& f, int N, FractionalOrder s) {
    validate_spectral_inputs(theta, psi, N);
    SeparableFlux y;
    for (int j = 0; j < N; ++j) {
        const double mu = std::sqrt(theta[static_cast<size_t>(j)]);
        const double gamma_j = inner(f, psi[static_cast<size_t>(j)]);
        if (gamma_j == 0.0) continue;
        CosSeries upsilon = (gamma_j / mu) * derivative(psi[static_cast<size_t>(j)]);
        y.x.add(upsilon, 0, mu);
        y.t.add((1.0 / mu) * derivative(upsilon), 0, mu);
    }
    const GramIntegrator gram(s);
    const double scale = 1.0 + gram.weighted_norm(y, s.dual_weight_exponent());
    const double div_norm =
        gram.weighted_norm(divergence(y), s.dual_weight_exponent());
    if (div_norm > 1e-12 * scale) {
        throw InternalConsistencyError(
            "candidate flux assembly produced nonzero divergence, norm " +
            std::to_string(div_norm));
    }
    return y;
}

SeparableFlux stream_flux(const StreamMode& mode) {
    if (mode.mode < 1) {
        throw std::invalid_argument("stream mode index must be >= 1");
    }
    if (!(mode.rate > 0.0)) {
        throw std::invalid_argument("stream mode rate must be positive");
    }
    // chi = c sin(m pi x) t e^{-nu t};  y = (d/dt chi, -d/dx chi)
    SeparableFlux y;
    const SinSeries sx = SinSeries::mode(mode.mode, mode.amplitude);
    y.x.add(sx, 0, mode.rate);
    y.x.add(-mode.rate * sx, 1, mode.rate);
    y.t.add(-1.0 * derivative(sx), 1, mode.rate);
    return y;
}

YgResiduals yg_residuals(const SeparableFlux& y, const SinSeries& g) {
    // Both membership conditions are s-independent; check them in the
    // unweighted L2(Q) norm.
    YgResiduals res;
    res.divergence_norm = weighted_norm(divergence(y), 0.0);
    const SinSeries defect_sin = y.t.trace_sin() + g;
    const CosSeries defect_cos = y.t.trace_cos();
    res.trace_defect_norm = mixed_l2_norm(defect_sin, defect_cos);
    return res;
}

SeparableFlux yg_flux(const SeparableFlux& base, const SinSeries& g,
                      const std::vector<StreamMode>& stream_modes) {
    SeparableFlux y;
    y.x = base.x;
    for (const StreamMode& mode : stream_modes) {
        const SeparableFlux sf = stream_flux(mode);
        y.x.add(sf.x);
    }

    // y_t(x,t) = -g(x) - integral_0^t div_x y_x dt'. For a term
    // D(x) t^k e^{-mu t} the primitive is
    //   D(x) [ k!/mu^{k+1} - e^{-mu t} sum_{i<=k} (k!/i!) t^i / mu^{k+1-i} ],
    // so the t-constant parts must cancel -g exactly; everything else decays.
    SinSeries const_sin = g;
    CosSeries const_cos;
    SeparableComponent decaying;
    SeparableComponent div_x;
    for (const Term& term : y.x.terms()) {
        add_x_derivative(div_x, term, 1.0);
    }
    for (const Term& term : div_x.terms()) {
        const int k = term.tpower;
        const double mu = term.rate;
        const double head = kFactorial[k] / std::pow(mu, k + 1);
        if (std::holds_alternative<SinSeries>(term.xpart)) {
            const_sin += head * std::get<SinSeries>(term.xpart);
        } else {
            const_cos += head * std::get<CosSeries>(term.xpart);
        }
        for (int i = 0; i <= k; ++i) {
            const double bi =
                kFactorial[k] / kFactorial[i] / std::pow(mu, k + 1 - i);
            Term piece = term;
            piece.tpower = i;
            std::visit([bi](auto& series) { series *= bi; }, piece.xpart);
            decaying.add(piece);
        }
    }

    const double residual_norm = mixed_l2_norm(const_sin, const_cos);
    if (residual_norm > kYgTolerance * std::max(1.0, g.l2_norm())) {
        throw NotInYgError(
            "flux is not representable in Y_g: the primitive's constant part "
            "does not cancel -g (residual norm " +
                std::to_string(residual_norm) + ")",
            residual_norm);
    }
    y.t = decaying;

    const YgResiduals check = yg_residuals(y, g);
    const double scale = std::max(1.0, g.l2_norm());
    if (check.divergence_norm > kYgTolerance * scale ||
        check.trace_defect_norm > kYgTolerance * scale) {
        throw InternalConsistencyError(
            "equilibrated flux failed verification: |div| = " +
            std::to_string(check.divergence_norm) + ", trace defect = " +
            std::to_string(check.trace_defect_norm));
    }
    return y;
}

} // namespace fracbound
