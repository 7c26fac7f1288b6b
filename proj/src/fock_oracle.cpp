#include "ecs/fock_oracle.hpp"

#include <cmath>
#include <sstream>

#include "ecs/special_functions.hpp"

namespace ecs {

namespace {

// Raw (unnormalized in the truncated space) coherent amplitudes
// c_n = e^{-beta/2} alpha^n / sqrt(n!), built incrementally so no
// intermediate ever exceeds 1 in magnitude.
std::vector<std::complex<double>> coherent_amps(double alpha_mag, double phase,
                                                int dim) {
    std::vector<std::complex<double>> c(dim);
    const std::complex<double> alpha = std::polar(alpha_mag, phase);
    c[0] = std::exp(-0.5 * alpha_mag * alpha_mag);
    for (int n = 1; n < dim; ++n)
        c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return c;
}

double norm_sq(const std::vector<std::complex<double>>& v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return s;
}

void check_tail(const std::vector<std::complex<double>>& v, double total,
                double tail_bound, const char* who) {
    const int n = static_cast<int>(v.size());
    const double tail = std::norm(v[n - 1]) + std::norm(v[n - 2]);
    if (tail > tail_bound * total) {
        std::ostringstream msg;
        msg << who << ": top-of-basis probability " << tail / total
            << " exceeds tail bound " << tail_bound << " at dim " << n
            << "; increase the truncation dimension";
        throw TruncationError(msg.str());
    }
}

void normalize(std::vector<std::complex<double>>& v) {
    const double n = std::sqrt(norm_sq(v));
    for (auto& a : v) a /= n;
}

int resolve_dim(const ECSParams& p, int dim, const char* who) {
    if (dim == 0) return default_dim(p);
    if (dim < 2)
        throw std::invalid_argument(std::string(who) +
                                    ": truncation dimension must be >= 2");
    return dim;
}

}  // namespace

int default_dim(const ECSParams& params) {
    params.validate();
    const double beta = params.beta();
    const int poisson = static_cast<int>(
        std::ceil(beta + 10.0 * std::sqrt(beta) + 20.0));
    return std::max(poisson, params.m + 20);
}

TruncatedState build_coherent(const ECSParams& params, int dim,
                              double tail_bound) {
    params.validate();
    if (params.m != 0)
        throw std::invalid_argument("build_coherent: params.m must be 0");
    const int n = resolve_dim(params, dim, "build_coherent");
    TruncatedState st;
    st.amps = coherent_amps(params.alpha_mag, params.phase, n);
    check_tail(st.amps, 1.0, tail_bound, "build_coherent");
    normalize(st.amps);
    return st;
}

TruncatedState build_ecs(const ECSParams& params, int dim, double tail_bound) {
    params.validate();
    const int n = resolve_dim(params, dim, "build_ecs");
    if (n <= params.m)
        throw std::invalid_argument("build_ecs: dimension must exceed m");

    auto v = coherent_amps(params.alpha_mag, params.phase, n);
    const double coh_norm_sq = norm_sq(v);
    check_tail(v, 1.0, tail_bound, "build_ecs");

    // m applications of a†: (a† v)_k = sqrt(k) v_{k-1}; the top amplitude
    // falls off the end of the basis each time, which is what the norm
    // identity below detects if it ever matters.
    for (int pass = 0; pass < params.m; ++pass) {
        for (int k = n - 1; k >= 1; --k)
            v[k] = std::sqrt(static_cast<double>(k)) * v[k - 1];
        v[0] = 0.0;
    }

    // || (a†)^m |alpha> ||^2 = m! N_m(beta), up to the coherent tail.
    double expected = coh_norm_sq * ecs_norm_poly(params.m, params.beta());
    for (int k = 2; k <= params.m; ++k) expected *= static_cast<double>(k);
    const double actual = norm_sq(v);
    if (std::abs(actual - expected) > 1e-10 * expected) {
        std::ostringstream msg;
        msg << "build_ecs: raised-state norm " << actual
            << " deviates from m! N_m identity " << expected
            << " beyond 1e-10 relative at dim " << n
            << "; truncation clipped the state";
        throw TruncationError(msg.str());
    }
    check_tail(v, actual, tail_bound, "build_ecs");

    normalize(v);
    TruncatedState st;
    st.amps = std::move(v);
    return st;
}

TruncatedState evolve(const TruncatedState& state, const OscillatorConfig& osc,
                      double t) {
    osc.validate();
    TruncatedState out;
    out.amps.resize(state.amps.size());
    for (int n = 0; n < state.dim(); ++n)
        out.amps[n] = state.amps[n] *
                      std::polar(1.0, -(n + 0.5) * osc.omega * t);
    return out;
}

namespace {

// <a>, <a^2> and <a† a> are the only matrix elements the quadratic moments
// need; each is a single banded pass over the amplitudes.
std::complex<double> lowering_expect(const TruncatedState& s) {
    std::complex<double> acc = 0.0;
    for (int n = 0; n + 1 < s.dim(); ++n)
        acc += std::conj(s.amps[n]) * s.amps[n + 1] *
               std::sqrt(static_cast<double>(n + 1));
    return acc;
}

std::complex<double> lowering_sq_expect(const TruncatedState& s) {
    std::complex<double> acc = 0.0;
    for (int n = 0; n + 2 < s.dim(); ++n)
        acc += std::conj(s.amps[n]) * s.amps[n + 2] *
               std::sqrt(static_cast<double>(n + 1)) *
               std::sqrt(static_cast<double>(n + 2));
    return acc;
}

void require_power(int power, const char* who) {
    if (power != 1 && power != 2)
        throw std::invalid_argument(std::string(who) +
                                    ": power must be 1 or 2");
}

}  // namespace

double mean_n(const TruncatedState& state) {
    double acc = 0.0;
    for (int n = 0; n < state.dim(); ++n)
        acc += n * std::norm(state.amps[n]);
    return acc;
}

double moment_x(const TruncatedState& state, const OscillatorConfig& osc,
                int power) {
    osc.validate();
    require_power(power, "moment_x");
    const double x0 = osc.x_scale();  // x = x0 (a + a†)
    if (power == 1) return x0 * 2.0 * lowering_expect(state).real();
    // x^2 = x0^2 (a^2 + a†^2 + 2 a† a + 1)
    return x0 * x0 *
           (1.0 + 2.0 * mean_n(state) + 2.0 * lowering_sq_expect(state).real());
}

double moment_p(const TruncatedState& state, const OscillatorConfig& osc,
                int power) {
    osc.validate();
    require_power(power, "moment_p");
    const double p0 = osc.p_scale();  // p = -i p0 (a - a†)
    if (power == 1) return p0 * 2.0 * lowering_expect(state).imag();
    // p^2 = p0^2 (1 + 2 a† a - a^2 - a†^2)
    return p0 * p0 *
           (1.0 + 2.0 * mean_n(state) - 2.0 * lowering_sq_expect(state).real());
}

}  // namespace ecs
