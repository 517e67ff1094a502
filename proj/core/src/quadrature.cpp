#include "fracbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace fracbound {

const GaussRule& gauss_legendre(int n) {
    if (n < 2 || n > 64) {
        throw std::invalid_argument("Gauss rule order must lie in [2, 64]");
    }
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Newton iteration on the Legendre recurrence, symmetric roots.
    GaussRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<size_t>(i)] = -x;
        rule.weights[static_cast<size_t>(i)] = w;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

void QuadratureSpec::validate() const {
    if (t_cut < 0.0 || x_panels < 1 || t_panels < 1 || nodes_per_panel < 2 ||
        graded_levels < 0) {
        throw std::invalid_argument("quadrature spec parameters must be positive");
    }
}

namespace {

struct Grid1D {
    std::vector<double> points;
    std::vector<double> weights; // quadrature weight, without t^a
};

Grid1D x_grid(int panels, int nodes) {
    const GaussRule& rule = gauss_legendre(nodes);
    Grid1D grid;
    grid.points.reserve(static_cast<size_t>(panels * nodes));
    grid.weights.reserve(static_cast<size_t>(panels * nodes));
    const double h = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = p * h;
        for (int q = 0; q < nodes; ++q) {
            grid.points.push_back(a + 0.5 * h * (1.0 + rule.nodes[static_cast<size_t>(q)]));
            grid.weights.push_back(0.5 * h * rule.weights[static_cast<size_t>(q)]);
        }
    }
    return grid;
}

// Geometric mesh on (0, t_cut], ratio 2 toward zero, each level split into
// `splits` uniform subpanels, plus the innermost sliver [0, t_cut 2^-levels].
Grid1D t_grid(double t_cut, int levels, int splits, int nodes) {
    const GaussRule& rule = gauss_legendre(nodes);
    Grid1D grid;
    auto add_panel = [&](double a, double b) {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (int q = 0; q < nodes; ++q) {
            grid.points.push_back(mid + half * rule.nodes[static_cast<size_t>(q)]);
            grid.weights.push_back(half * rule.weights[static_cast<size_t>(q)]);
        }
    };
    double hi = t_cut;
    for (int lvl = 0; lvl < levels; ++lvl) {
        const double lo = hi * 0.5;
        const double step = (hi - lo) / splits;
        for (int j = splits - 1; j >= 0; --j) {
            add_panel(lo + j * step, lo + (j + 1) * step);
        }
        hi = lo;
    }
    add_panel(0.0, hi); // sliver; graded deep enough that this is negligible
    return grid;
}

double pick_t_cut(const SeparableComponent& field) {
    const double mu_min = field.min_rate();
    const double kmax = field.max_tpower();
    double t = 19.0 / mu_min;
    for (int i = 0; i < 4; ++i) {
        t = (38.0 + (2.0 * kmax + 1.0) * std::log1p(t)) / (2.0 * mu_min);
    }
    return t;
}

int pick_levels(double exponent, double t_cut) {
    const double depth = 36.5 / (std::min(exponent, 0.0) + 1.0) +
                         std::max(0.0, std::log2(t_cut));
    return std::clamp(static_cast<int>(std::ceil(depth)) + 4, 24, 600);
}

// One full tensor-product pass. Terms are evaluated on the grid through
// their pointwise factorizations; no orthogonality or Gamma identities.
double tensor_pass(const SeparableComponent& field, double exponent,
                   const Grid1D& gx, const Grid1D& gt) {
    const size_t nx = gx.points.size();
    const size_t nt = gt.points.size();
    std::vector<double> values(nx * nt, 0.0);
    std::vector<double> tx(nx), tt(nt);
    for (const Term& term : field.terms()) {
        for (size_t i = 0; i < nx; ++i) tx[i] = term.eval_x(gx.points[i]);
        for (size_t j = 0; j < nt; ++j) {
            const double t = gt.points[j];
            double w = std::exp(-term.rate * t);
            for (int k = 0; k < term.tpower; ++k) w *= t;
            tt[j] = w;
        }
        for (size_t i = 0; i < nx; ++i) {
            const double xi = tx[i];
            if (xi == 0.0) continue;
            double* row = values.data() + i * nt;
            for (size_t j = 0; j < nt; ++j) row[j] += xi * tt[j];
        }
    }
    double acc = 0.0;
    for (size_t j = 0; j < nt; ++j) {
        const double wt = gt.weights[j] * std::pow(gt.points[j], exponent);
        double xacc = 0.0;
        for (size_t i = 0; i < nx; ++i) {
            const double v = values[i * nt + j];
            xacc += gx.weights[i] * v * v;
        }
        acc += wt * xacc;
    }
    return acc;
}

int field_max_mode(const SeparableComponent& field) {
    int m = 1;
    for (const Term& term : field.terms()) {
        m = std::max(m, std::visit([](const auto& s) { return s.max_mode(); },
                                   term.xpart));
    }
    return m;
}

} // namespace

QuadResult quad_weighted_norm(const SeparableComponent& field,
                              double weight_exponent,
                              const QuadratureSpec& spec) {
    spec.validate();
    if (!(weight_exponent > -1.0)) {
        throw DomainError("quadrature weight exponent must exceed -1, got " +
                          std::to_string(weight_exponent));
    }
    if (field.empty()) return {0.0, 0.0};

    const double t_cut = spec.t_cut > 0.0 ? spec.t_cut : pick_t_cut(field);
    const int levels = spec.graded_levels > 0 ? spec.graded_levels
                                              : pick_levels(weight_exponent, t_cut);
    const int splits = std::max(1, spec.t_panels / 8);
    const int xp = std::max(spec.x_panels, field_max_mode(field));

    const Grid1D gx = x_grid(xp, spec.nodes_per_panel);
    const Grid1D gt = t_grid(t_cut, levels, splits, spec.nodes_per_panel);
    const double coarse = tensor_pass(field, weight_exponent, gx, gt);

    const Grid1D gx2 = x_grid(xp + 2, spec.nodes_per_panel + 2);
    const Grid1D gt2 = t_grid(t_cut * 1.25, levels + 6, splits + 1,
                              spec.nodes_per_panel + 2);
    const double fine = tensor_pass(field, weight_exponent, gx2, gt2);

    // tail of the truncated time axis, bounded by the decay past t_cut
    const double mu_min = field.min_rate();
    double boundary = 0.0;
    for (size_t i = 0; i < gx.points.size(); ++i) {
        const double v = field.eval(gx.points[i], t_cut);
        boundary += gx.weights[i] * v * v;
    }
    const double tail =
        std::pow(t_cut, weight_exponent) * boundary / (2.0 * mu_min) * 2.0;

    const double integral = std::max(fine, 0.0);
    QuadResult result;
    result.value = std::sqrt(integral);
    const double err_sq = std::abs(fine - coarse) + tail + 1e-15 * integral;
    result.error_estimate =
        result.value > 0.0 ? err_sq / (2.0 * result.value) : std::sqrt(err_sq);
    return result;
}

QuadResult quad_weighted_norm(const SeparableField& field,
                              double weight_exponent,
                              const QuadratureSpec& spec) {
    return quad_weighted_norm(field.component(), weight_exponent, spec);
}

} // namespace fracbound
