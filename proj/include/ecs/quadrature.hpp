#pragma once

#include <functional>
#include <vector>

#include "ecs/types.hpp"

// Third, quadrature-based route to the moments: integrate sampled densities
// directly. The default rule is a fixed-node Gauss-Hermite scheme whose node
// count grows with the declared span, so displaced Gaussian-times-polynomial
// densities are integrated to rounding accuracy without any adaptivity; an
// adaptive Simpson fallback is kept for diagnostics and for integrands that
// do not decay like a Gaussian.

namespace ecs {

enum class QuadMethod { FixedNodeGaussian, AdaptiveInterval };

struct QuadratureSpec {
    QuadMethod method = QuadMethod::FixedNodeGaussian;
    double eps_span = 12.0;    // integrate eps in [-eps_span, eps_span]
    double rel_tol = 1e-10;    // adaptive-route tolerance
    // Generous by design: reaching 1e-10 on a full-span packet costs some
    // twenty thousand panel splits, and each split is only five samples.
    int max_subdivisions = 50000;
};

// Span wide enough for the packet: 8 + eps0 + 2*sqrt(2m+1) covers the
// classical excursion plus the Hermite spread plus eight decay lengths.
QuadratureSpec default_quadrature_spec(const ECSParams& params);

// integral of x^weight_power * f(eps(x)) dx for weight_power in {0, 1, 2},
// where f is a density sampled in the dimensionless coordinate and
// x = eps / gamma. Summation order is fixed (pairwise), so results are
// bitwise reproducible run to run.
//
// ConvergenceError if the adaptive route exhausts max_subdivisions.
// Adaptive leaf targets are clipped at a few ulps of the integrand's
// magnitude, so rel_tol below ~1e-13 yields machine-resolution results
// rather than endless refinement.
double integrate_density(const std::function<double(double)>& f,
                         const QuadratureSpec& spec,
                         const OscillatorConfig& osc, int weight_power);

// Gauss-Hermite nodes with exp(+x^2)-adjusted weights:
//   integral g(x) dx  ~=  sum_i weights[i] * g(nodes[i])
// for g decaying like a Gaussian. Exposed for direct testing.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(int n);

// Node count the fixed rule uses for a given span (clamped to [64, 320]).
int node_count_for_span(double span);

}  // namespace ecs
