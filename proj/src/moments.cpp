#include "ecs/moments.hpp"

#include <cmath>
#include <sstream>

#include "ecs/fock_oracle.hpp"
#include "ecs/special_functions.hpp"

namespace ecs {

namespace {

// The four beta-polynomials, each summed with exact term ratios so no
// binomials or factorials are ever formed explicitly.

// S1 = (1/m!) sum_r C(m,r) beta^r (m+1)!/(r+1)!
double s1_sum(int m, double beta) {
    double term = m + 1.0;
    double sum = term;
    for (int r = 0; r < m; ++r) {
        term *= beta * (m - r) / (static_cast<double>(r + 1) * (r + 2));
        sum += term;
    }
    return sum;
}

// S2 = ((m+2)!/m!) sum_r C(m,r) beta^r / (r+2)!
double s2_sum(int m, double beta) {
    double term = 0.5 * (m + 1.0) * (m + 2.0);
    double sum = term;
    for (int r = 0; r < m; ++r) {
        term *= beta * (m - r) / (static_cast<double>(r + 1) * (r + 3));
        sum += term;
    }
    return sum;
}

// S4 = ((m+1)!/m!) sum_{r<=m} C(m+1,r) beta^r / r!
double s4_sum(int m, double beta) {
    double term = m + 1.0;
    double sum = term;
    for (int r = 0; r < m; ++r) {
        term *= beta * (m + 1 - r) / (static_cast<double>(r + 1) * (r + 1));
        sum += term;
    }
    return sum;
}

// T' = sum_{r<=m} C(m+1,r+1) beta^{r+1} / r!  (the <a† n a†...> cross sum)
double tprime_sum(int m, double beta) {
    double term = (m + 1.0) * beta;
    double sum = term;
    for (int r = 0; r < m; ++r) {
        term *= beta * (m - r) / (static_cast<double>(r + 2) * (r + 1));
        sum += term;
    }
    return sum;
}

// Literal printed S3 = (1/m!) [ m N_m + T' ]; kept for the PaperLiteral
// mode. Disagrees with the operator algebra (see header).
double s3_literal(int m, double beta) {
    double fact = 1.0;
    for (int k = 2; k <= m; ++k) fact *= static_cast<double>(k);
    return (m * ecs_norm_poly(m, beta) + tprime_sum(m, beta)) / fact;
}

double cos_sq(double x) {
    const double c = std::cos(x);
    return c * c;
}

double sin_sq(double x) {
    const double s = std::sin(x);
    return s * s;
}

}  // namespace

MomentConstants moment_constants(int m, double beta, ConstantsMode mode) {
    if (m < 0) throw std::invalid_argument("moment_constants: m must be >= 0");
    if (beta < 0.0)
        throw std::invalid_argument("moment_constants: beta must be >= 0");

    MomentConstants mc;
    mc.m = m;
    mc.beta = beta;
    mc.N = ecs_norm_poly(m, beta);
    mc.S1 = s1_sum(m, beta);
    mc.S2 = s2_sum(m, beta);
    mc.S4 = s4_sum(m, beta);
    mc.S3 = (mode == ConstantsMode::Corrected)
                ? 2.0 * tprime_sum(m, beta) + (2.0 * m + 1.0) * mc.N - mc.S4
                : s3_literal(m, beta);
    mc.C1 = (4.0 * beta / mc.N) * (mc.S2 - mc.S1 * mc.S1 / mc.N);
    mc.C2 = (mc.S3 + mc.S4 - 2.0 * beta * mc.S2) / mc.N;
    return mc;
}

namespace {

void require_match(const MomentConstants& mc, const ECSParams& p) {
    const double beta = p.beta();
    if (mc.m != p.m ||
        std::abs(mc.beta - beta) > 1e-12 * std::max(1.0, beta)) {
        std::ostringstream msg;
        msg << "moment constants built for (m=" << mc.m << ", beta=" << mc.beta
            << ") used with params (m=" << p.m << ", beta=" << beta << ")";
        throw std::invalid_argument(msg.str());
    }
}

double variance_factor(const MomentConstants& mc, double cs, const char* who) {
    const double v = mc.C1 * cs + mc.C2;
    if (!(v > 0.0)) {
        std::ostringstream msg;
        msg << who << ": nonpositive variance factor " << v << " at m=" << mc.m
            << ", beta=" << mc.beta << " (inconsistent constants)";
        throw DomainError(msg.str());
    }
    return v;
}

}  // namespace

double mean_x(const MomentConstants& mc, const ECSParams& params,
              const OscillatorConfig& osc, double t) {
    params.validate();
    osc.validate();
    require_match(mc, params);
    return 2.0 * osc.x_scale() * params.alpha_mag * (mc.S1 / mc.N) *
           std::cos(osc.omega * t - params.phase);
}

double delta_x(const MomentConstants& mc, const OscillatorConfig& osc,
               double t, double phase) {
    osc.validate();
    const double u = osc.omega * t - phase;
    return osc.x_scale() * std::sqrt(variance_factor(mc, cos_sq(u), "delta_x"));
}

double delta_p(const MomentConstants& mc, const OscillatorConfig& osc,
               double t, double phase) {
    osc.validate();
    const double u = osc.omega * t - phase;
    return osc.p_scale() * std::sqrt(variance_factor(mc, sin_sq(u), "delta_p"));
}

double uncertainty_product(const MomentConstants& mc,
                           const OscillatorConfig& osc, double t,
                           double phase) {
    osc.validate();
    const double u = osc.omega * t - phase;
    const double rad = mc.C2 * mc.C2 + mc.C1 * mc.C2 +
                       0.25 * mc.C1 * mc.C1 * sin_sq(2.0 * u);
    if (!(rad > 0.0))
        throw DomainError("uncertainty_product: nonpositive radicand");
    return 0.5 * osc.hbar * std::sqrt(rad);
}

std::pair<double, double> squeeze_ratio_bounds(const MomentConstants& mc) {
    const double a = mc.C1 + mc.C2;  // cos^2 u = 1
    const double b = mc.C2;          // cos^2 u = 0
    const double lo = std::min(a, b), hi = std::max(a, b);
    if (!(lo > 0.0))
        throw DomainError("squeeze_ratio_bounds: nonpositive variance factor");
    return {std::sqrt(lo), std::sqrt(hi)};
}

double min_width_ratio(const MomentConstants& mc) {
    return squeeze_ratio_bounds(mc).first;
}

bool is_squeezed(const MomentConstants& mc) {
    return min_width_ratio(mc) < 1.0;
}

double constants_residual(const MomentConstants& mc,
                          const OscillatorConfig& osc) {
    osc.validate();
    const ECSParams p = ECSParams::from_beta(mc.m, mc.beta);
    const TruncatedState st = build_ecs(p);
    const double x0sq = osc.x_scale() * osc.x_scale();

    auto var_factor = [&](double t) {
        const TruncatedState et = evolve(st, osc, t);
        const double mx = moment_x(et, osc, 1);
        return (moment_x(et, osc, 2) - mx * mx) / x0sq;
    };
    // u = 0 probes C1 + C2, u = pi/2 probes C2 alone
    const double f0 = var_factor(0.0);
    const double f1 = var_factor(0.5 * M_PI / osc.omega);
    const double r0 = std::abs(f0 - (mc.C1 + mc.C2)) / std::max(1.0, std::abs(f0));
    const double r1 = std::abs(f1 - mc.C2) / std::max(1.0, std::abs(f1));
    return std::max(r0, r1);
}

MomentReport width_series(const ECSParams& params, const OscillatorConfig& osc,
                          double t_min, double t_max, int steps,
                          ConstantsMode mode) {
    params.validate();
    osc.validate();
    if (steps < 1)
        throw std::invalid_argument("width_series: need at least one step");
    if (steps > 1 && !(t_min < t_max))
        throw std::invalid_argument("width_series: t_min must be < t_max");

    const MomentConstants mc = moment_constants(params.m, params.beta(), mode);
    if (mode == ConstantsMode::Corrected) {
        const double res = constants_residual(mc, osc);
        if (res > 1e-8) {
            std::ostringstream msg;
            msg << "width_series: closed-form constants disagree with the "
                   "Fock oracle (residual "
                << res << ") at m=" << params.m << ", beta=" << params.beta();
            throw DomainError(msg.str());
        }
    }

    MomentReport rep;
    rep.t.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double t =
            (steps == 1) ? t_min
                         : t_min + (t_max - t_min) * static_cast<double>(i) /
                                       static_cast<double>(steps - 1);
        rep.t.push_back(t);
        rep.mean_x.push_back(mean_x(mc, params, osc, t));
        rep.delta_x.push_back(delta_x(mc, osc, t, params.phase));
        rep.delta_p.push_back(delta_p(mc, osc, t, params.phase));
        rep.product.push_back(uncertainty_product(mc, osc, t, params.phase));
    }
    return rep;
}

}  // namespace ecs
