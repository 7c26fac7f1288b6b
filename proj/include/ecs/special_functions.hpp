#pragma once

#include <complex>
#include <vector>

// Polynomial building blocks: physicists' Hermite polynomials (real and
// complex argument), the excited-coherent-state normalization polynomial,
// and the shifted-Hermite summation identity
//
//   sum_{n>=0} s^n H_{n+m}(eps) / n!  =  exp(-s^2 + 2 s eps) * H_m(eps - s)
//
// which is what collapses the displaced Fock expansion of an excited
// coherent state into a single Hermite factor. Both sides are provided so
// they can be cross-checked term by term.

namespace ecs {

// H_n by the upward recurrence H_{k+1} = 2x H_k - 2k H_{k-1}. The recurrence
// runs in the direction of the dominant solution, so it is stable for every
// real or complex argument we need.
double hermite(int n, double x);
std::complex<double> hermite(int n, std::complex<double> z);

// H_0..H_n at a fixed argument, generated by the same recurrence.
struct PolySequence {
    double argument = 0.0;
    std::vector<double> values;  // values[k] = H_k(argument)
};
PolySequence hermite_sequence(int n_max, double x);

// Normalization polynomial of the m-fold excited coherent state:
//   N_m(beta) = sum_{r=0}^{m} C(m,r) beta^r / r!
// (equal to the Laguerre value L_m(-beta); the series form is the primary
// definition here, the Laguerre recurrence serves as an independent check).
// All terms are positive, so the sum is well conditioned.
double ecs_norm_poly(int m, double beta);

// Partial sum of the left-hand side of the identity above, with a hard term
// budget. `converged` reports whether three consecutive partial sums agreed
// to rel_tol before the budget ran out; the partial sum is returned either
// way (for strongly cancelling arguments the value can be fully converged in
// double precision while the last increments still sit above rel_tol).
struct SeriesResult {
    std::complex<double> value{0.0, 0.0};
    bool converged = false;
    int terms_used = 0;
};
SeriesResult shifted_hermite_sum(int m, std::complex<double> s, double eps,
                                 int terms, double rel_tol = 1e-14);

// Right-hand side of the identity: exp(-s^2 + 2 s eps) * H_m(eps - s).
// Accepts complex s so the time-evolved displacement s = (eps0/2) e^{-i u}
// can be fed straight in.
std::complex<double> shifted_hermite_closed(int m, std::complex<double> s,
                                            double eps);

}  // namespace ecs
