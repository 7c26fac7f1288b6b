#include "ecs/closed_form.hpp"

#include <cmath>

#include "ecs/special_functions.hpp"

namespace ecs {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Normalized Hermite functions phi_n(eps) = psi_n / sqrt(gamma) by the
// stable recurrence
//   phi_{k+1} = eps sqrt(2/(k+1)) phi_k - sqrt(k/(k+1)) phi_{k-1},
// phi_0 = pi^{-1/4} e^{-eps^2/2}. Keeps everything O(1) at any order.
double phi_next(int k, double eps, double phi_k, double phi_km1) {
    return eps * std::sqrt(2.0 / (k + 1)) * phi_k -
           std::sqrt(static_cast<double>(k) / (k + 1)) * phi_km1;
}

double phi0(double eps) {
    return std::pow(kPi, -0.25) * std::exp(-0.5 * eps * eps);
}

// 1 / sqrt(2^m N_m m!): prefactor common to the excited packet forms.
double ecs_prefactor(int m, double beta) {
    double fact = 1.0;
    for (int k = 2; k <= m; ++k) fact *= static_cast<double>(k);
    return 1.0 / std::sqrt(std::pow(2.0, m) * ecs_norm_poly(m, beta) * fact);
}

void require_zero_phase(const ECSParams& p, const char* who) {
    if (p.phase != 0.0)
        throw PhaseError(std::string(who) +
                         ": stationary form is only defined for phase 0; "
                         "use psi_ecs_t for a rotated state");
}

}  // namespace

double psi_fock(int n, double eps, const OscillatorConfig& osc) {
    osc.validate();
    if (n < 0) throw std::invalid_argument("psi_fock: n must be >= 0");
    double pm1 = 0.0, p = phi0(eps);
    for (int k = 0; k < n; ++k) {
        double next = phi_next(k, eps, p, pm1);
        pm1 = p;
        p = next;
    }
    return std::sqrt(osc.gamma()) * p;
}

double psi_coherent(const ECSParams& params, double eps,
                    const OscillatorConfig& osc) {
    params.validate();
    osc.validate();
    require_zero_phase(params, "psi_coherent");
    const double d = eps - params.eps0();
    return std::sqrt(osc.gamma() / std::sqrt(kPi)) * std::exp(-0.5 * d * d);
}

double psi_ecs(const ECSParams& params, double eps,
               const OscillatorConfig& osc) {
    params.validate();
    osc.validate();
    require_zero_phase(params, "psi_ecs");
    ECSParams ground = params;
    ground.m = 0;
    return ecs_prefactor(params.m, params.beta()) *
           hermite(params.m, eps - 0.5 * params.eps0()) *
           psi_coherent(ground, eps, osc);
}

std::complex<double> psi_ecs_t(const ECSParams& params, double eps, double t,
                               const OscillatorConfig& osc) {
    params.validate();
    osc.validate();
    const double u = osc.omega * t - params.phase;
    const double e0 = params.eps0();
    const std::complex<double> rot = std::polar(1.0, -u);  // e^{-iu}
    // coherent envelope: exp(-e0^2/4 (1 + e^{-2iu}) - eps^2/2
    //                        + eps e0 e^{-iu} - iu/2)
    const std::complex<double> expo =
        -0.25 * e0 * e0 * (1.0 + rot * rot) - 0.5 * eps * eps +
        eps * e0 * rot - std::complex<double>(0.0, 0.5 * u);
    const std::complex<double> envelope =
        std::sqrt(osc.gamma() / std::sqrt(kPi)) * std::exp(expo);
    return ecs_prefactor(params.m, params.beta()) *
           hermite(params.m, std::complex<double>(eps) - 0.5 * e0 * rot) *
           envelope;
}

double density_m1(const ECSParams& params, double eps, double t,
                  const OscillatorConfig& osc) {
    params.validate();
    osc.validate();
    if (params.m != 1)
        throw OrderError("density_m1: closed form is specific to m = 1");
    const double beta = params.beta();
    const double e0 = params.eps0();
    const double c = std::cos(osc.omega * t - params.phase);
    const double d = eps - e0 * c;
    return 2.0 * osc.gamma() / ((1.0 + beta) * std::sqrt(kPi)) *
           std::exp(-d * d) * (eps * eps - eps * e0 * c + 0.25 * e0 * e0);
}

std::complex<double> synthesize(const TruncatedState& state, double eps,
                                const OscillatorConfig& osc) {
    osc.validate();
    // one streaming pass of the phi recurrence against the amplitudes
    std::complex<double> acc = 0.0;
    double pm1 = 0.0, p = phi0(eps);
    for (int n = 0; n < state.dim(); ++n) {
        acc += state.amps[n] * p;
        double next = phi_next(n, eps, p, pm1);
        pm1 = p;
        p = next;
    }
    return std::sqrt(osc.gamma()) * acc;
}

}  // namespace ecs
