#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Shared parameter types and the error taxonomy for the excited-coherent-state
// library. Everything here is a plain value type; the functions that consume
// them validate their preconditions and throw one of the exceptions below.

namespace ecs {

// Harmonic oscillator configuration. Natural units (hbar = mass = omega = 1)
// are the defaults. gamma = sqrt(mass*omega/hbar) is the inverse length scale;
// eps = gamma * x is the dimensionless coordinate used throughout.
struct OscillatorConfig {
    double omega = 1.0;
    double mass = 1.0;
    double hbar = 1.0;

    double gamma() const { return std::sqrt(mass * omega / hbar); }
    // ground-state position width sqrt(hbar / (2 m w)) and its momentum twin
    double x_scale() const { return std::sqrt(hbar / (2.0 * mass * omega)); }
    double p_scale() const { return std::sqrt(mass * hbar * omega / 2.0); }
    double period() const { return 2.0 * M_PI / omega; }

    void validate() const;
};

// Parameters of an excited coherent state |z,m>: a coherent state of complex
// amplitude alpha = alpha_mag * exp(i*phase) with m quanta added by the
// raising operator. beta = |alpha|^2; eps0 = sqrt(2)*|alpha| is the packet
// displacement in eps units. The phase enters time-dependent quantities only
// through the combination omega*t - phase.
struct ECSParams {
    int m = 0;
    double alpha_mag = 0.0;
    double phase = 0.0;

    double beta() const { return alpha_mag * alpha_mag; }
    double eps0() const { return std::sqrt(2.0) * alpha_mag; }

    static ECSParams from_beta(int m, double beta, double phase = 0.0);
    void validate() const;
};

// Uniform sampling grid in the dimensionless coordinate eps.
struct GridSpec {
    double eps_min = -6.0;
    double eps_max = 6.0;
    int points = 241;

    double eps_at(int i) const {
        return eps_min + (eps_max - eps_min) * static_cast<double>(i) /
                             static_cast<double>(points - 1);
    }
    void validate() const;
};

// A truncated Fock vector cannot represent the requested state to the
// declared tail bound (or an exact norm identity failed under truncation).
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stationary (t-independent) wave form was requested with a nonzero
// coherent phase; only the time-dependent forms carry the phase.
struct PhaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The operation is only defined for a specific excitation order m.
struct OrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters left the mathematical domain (e.g. a nonpositive variance).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An adaptive integration budget was exhausted before reaching tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ecs
