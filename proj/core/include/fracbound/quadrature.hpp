#ifndef FRACBOUND_QUADRATURE_HPP
#define FRACBOUND_QUADRATURE_HPP

#include "fracbound/fields.hpp"

namespace fracbound {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Controls for the brute-force cylinder quadrature. The rule is a tensor
/// product of composite Gauss panels: uniform panels in x, a geometric mesh
/// (ratio 2 toward t = 0) in t that absorbs the t^a weight singularity and
/// the spread of decay rates, truncated at t_cut with an exponential tail
/// bound folded into the error estimate.
struct QuadratureSpec {
    double t_cut = 0.0;      // 0 = derive from the slowest decay rate
    int x_panels = 12;
    int t_panels = 24;       // subdivision budget per geometric level
    int nodes_per_panel = 16;
    int graded_levels = 0;   // 0 = derive from the weight exponent

    void validate() const;
};

struct QuadResult {
    double value = 0.0;          // sqrt of the weighted integral
    double error_estimate = 0.0; // absolute, on the returned norm
};

/// Brute-force evaluation of sqrt( integral_Q t^exponent |field|^2 dx dt ),
/// independent of the closed-form Gram machinery. Requires exponent > -1.
QuadResult quad_weighted_norm(const SeparableComponent& field,
                              double weight_exponent,
                              const QuadratureSpec& spec);
QuadResult quad_weighted_norm(const SeparableField& field,
                              double weight_exponent,
                              const QuadratureSpec& spec);

} // namespace fracbound

#endif
