#pragma once

#include <complex>

#include "ecs/fock_oracle.hpp"
#include "ecs/types.hpp"

// Closed-form position-space wave functions, with eps = gamma * x:
//
//   psi_n      = [gamma / (2^n n! sqrt(pi))]^{1/2} H_n(eps) e^{-eps^2/2}
//   psi_alpha  = (gamma/sqrt(pi))^{1/2} e^{-(eps - eps0)^2 / 2}
//   psi_{z,m}  = [2^m N_m m!]^{-1/2} H_m(eps - eps0/2) * psi_alpha
//
// and their time-dependent versions, where the only change is the rotation
// e0 -> eps0 e^{-iu} with u = omega*t - phase. The m-fold excited packet
// keeps a rigid Gaussian envelope centered on the classical trajectory
// eps0*cos(u), with the Hermite factor carrying the node structure.

namespace ecs {

// Stationary number state psi_n(eps). Evaluated with the normalized
// recurrence on Hermite functions, so large n neither overflows nor loses
// the normalization.
double psi_fock(int n, double eps, const OscillatorConfig& osc);

// Stationary coherent packet. Throws PhaseError unless params.phase == 0;
// a nonzero phase has no stationary wave function, use psi_ecs_t.
double psi_coherent(const ECSParams& params, double eps,
                    const OscillatorConfig& osc);

// Stationary excited coherent packet (m from params). PhaseError as above.
double psi_ecs(const ECSParams& params, double eps,
               const OscillatorConfig& osc);

// Time-dependent excited coherent packet, any phase. Reduces to psi_ecs at
// u = omega*t - phase = 0.
std::complex<double> psi_ecs_t(const ECSParams& params, double eps, double t,
                               const OscillatorConfig& osc);

// |psi_{z,1}(eps,t)|^2 in closed form:
//   2 gamma / ((1+beta) sqrt(pi)) * e^{-(eps - eps0 c)^2}
//     * (eps^2 - eps*eps0*c + eps0^2/4),  c = cos(omega*t - phase).
// Throws OrderError unless params.m == 1. Cross-checked against
// |psi_ecs_t|^2 in the verification suite.
double density_m1(const ECSParams& params, double eps, double t,
                  const OscillatorConfig& osc);

// Position amplitude of a truncated Fock vector: sum_n amps[n] psi_n(eps).
// This is the oracle-route wave function used to referee the closed forms.
std::complex<double> synthesize(const TruncatedState& state, double eps,
                                const OscillatorConfig& osc);

}  // namespace ecs
