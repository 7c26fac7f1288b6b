#pragma once

#include <utility>
#include <vector>

#include "ecs/types.hpp"

// Closed-form moments of the excited coherent state. Everything reduces to
// four beta-polynomials (finite binomial sums) and the two combinations
//
//   C1 = (4 beta / N_m) (S2 - S1^2 / N_m)
//   C2 = (S3 + S4 - 2 beta S2) / N_m
//
// in terms of which, with u = omega*t - phase and x0 = sqrt(hbar/2 m w):
//
//   <x>(t)     = 2 x0 |alpha| (S1/N_m) cos u
//   Dx(t)      = x0 [C1 cos^2 u + C2]^{1/2}
//   Dp(t)      = p0 [C1 sin^2 u + C2]^{1/2}
//   Dx Dp      = (hbar/2) [C2^2 + C1 C2 + (C1^2/4) sin^2 2u]^{1/2}
//
// S1, S2, S4 are used as printed in the source derivation; the printed S3
// carries a transcription error (for m = 1 it shifts C2 by beta^2/(1+beta)),
// so the default here is the corrected form
//
//   S3 = 2 T' + (2m+1) N_m - S4,   T' = sum_r C(m+1, r+1) beta^{r+1} / r!
//
// which restores the operator identity (S3 + S4)/N_m = 2<n> + 1. The
// corrected constants are cross-validated against the Fock oracle; the
// literal form stays available for side-by-side comparison.

namespace ecs {

enum class ConstantsMode { Corrected, PaperLiteral };

struct MomentConstants {
    int m = 0;
    double beta = 0.0;
    double N = 1.0;  // norm polynomial N_m(beta)
    double S1 = 1.0, S2 = 1.0, S3 = 0.0, S4 = 1.0;
    double C1 = 0.0, C2 = 1.0;
};

MomentConstants moment_constants(int m, double beta,
                                 ConstantsMode mode = ConstantsMode::Corrected);

// <x>(t). params supplies |alpha| and the phase; it must agree with the
// (m, beta) the constants were built for.
double mean_x(const MomentConstants& mc, const ECSParams& params,
              const OscillatorConfig& osc, double t);

// Position / momentum spreads and their product. Throw DomainError if the
// radicand is nonpositive (cannot happen with oracle-validated constants).
double delta_x(const MomentConstants& mc, const OscillatorConfig& osc,
               double t, double phase = 0.0);
double delta_p(const MomentConstants& mc, const OscillatorConfig& osc,
               double t, double phase = 0.0);
double uncertainty_product(const MomentConstants& mc,
                           const OscillatorConfig& osc, double t,
                           double phase = 0.0);

// Range of Dx(t)/x0 over a full cycle: {sqrt(min(C2, C1+C2)),
// sqrt(max(C2, C1+C2))} -- cos^2 u sweeps [0, 1].
std::pair<double, double> squeeze_ratio_bounds(const MomentConstants& mc);

// Smallest width ratio min_t Dx(t)/x0, and whether it drops below the
// ground-state width (strictly; the threshold case is not squeezed).
double min_width_ratio(const MomentConstants& mc);
bool is_squeezed(const MomentConstants& mc);

// Largest relative disagreement between {C1+C2, C2} and the Fock-oracle
// variances at u = 0 and u = pi/2. The closed-form route is only trusted
// once this is at rounding level; width_series checks it before emitting.
double constants_residual(const MomentConstants& mc,
                          const OscillatorConfig& osc);

// Time series of the four moment quantities on an inclusive [t_min, t_max]
// grid. In Corrected mode the constants are validated against the oracle
// first (DomainError on disagreement beyond 1e-8).
struct MomentReport {
    std::vector<double> t;
    std::vector<double> mean_x;
    std::vector<double> delta_x;
    std::vector<double> delta_p;
    std::vector<double> product;
};
MomentReport width_series(const ECSParams& params, const OscillatorConfig& osc,
                          double t_min, double t_max, int steps,
                          ConstantsMode mode = ConstantsMode::Corrected);

}  // namespace ecs
