#pragma once

#include <complex>
#include <vector>

#include "ecs/types.hpp"

// Truncated Fock-space route. States are finite vectors of number-basis
// amplitudes; construction, time evolution and quadrature operators are all
// exact banded linear algebra, so this module is the numerical referee for
// the closed-form expressions elsewhere in the library.

namespace ecs {

struct TruncatedState {
    std::vector<std::complex<double>> amps;  // amps[n] multiplies |n>

    int dim() const { return static_cast<int>(amps.size()); }
};

// Default truncation dimension: max(ceil(beta + 10*sqrt(beta) + 20), m + 20).
// Generous enough that the retained tail mass is far below the default bound.
int default_dim(const ECSParams& params);

// Normalized coherent state c_n = e^{-beta/2} alpha^n / sqrt(n!). Requires
// params.m == 0. The last two raw amplitudes must carry less than tail_bound
// of probability, otherwise the truncation is declared unusable.
// Pass dim = 0 to use default_dim.
TruncatedState build_coherent(const ECSParams& params, int dim = 0,
                              double tail_bound = 1e-14);

// Excited coherent state: coherent amplitudes, m applications of the raising
// operator (subdiagonal sqrt(n+1)), then renormalization. Before
// renormalizing, the squared norm is checked against the exact identity
//   || (a†)^m |alpha> ||^2 = m! * N_m(beta)
// to 1e-10 relative; a violation means the truncation clipped the state.
TruncatedState build_ecs(const ECSParams& params, int dim = 0,
                         double tail_bound = 1e-14);

// Free evolution: amps[n] *= exp(-i (n + 1/2) omega t). Returns a new state.
TruncatedState evolve(const TruncatedState& state, const OscillatorConfig& osc,
                      double t);

// <x^power> and <p^power> for power in {1, 2}, from the banded matrix
// elements of (a + a†) and i(a† - a). The state must be normalized.
double moment_x(const TruncatedState& state, const OscillatorConfig& osc,
                int power);
double moment_p(const TruncatedState& state, const OscillatorConfig& osc,
                int power);

// Mean occupation <n> (handy diagnostic; also fixes the time-independent
// part of the variances).
double mean_n(const TruncatedState& state);

}  // namespace ecs
