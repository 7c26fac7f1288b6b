#include "ecs/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ecs {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Evaluate the damped orthonormal pair (q_{n-1}, q_n) at z, where
// q_j = (orthonormal Hermite_j) * e^{-z^2/2}. The Gaussian factor rides
// along the linear recurrence, so values stay O(1) inside the oscillatory
// region and neither the polynomials nor the weights ever leave double
// range.
void damped_pair(int n, double z, double& qnm1, double& qn) {
    double qm1 = 0.0;
    double q = std::pow(kPi, -0.25) * std::exp(-0.5 * z * z);
    for (int j = 0; j < n; ++j) {
        const double next =
            z * std::sqrt(2.0 / (j + 1)) * q -
            std::sqrt(static_cast<double>(j) / (j + 1)) * qm1;
        qm1 = q;
        q = next;
    }
    qnm1 = qm1;
    qn = q;
}

// Fixed-order pairwise reduction: summation order depends only on the node
// count, so identical inputs give bitwise identical integrals.
double pairwise_sum(const std::vector<double>& v, std::size_t lo,
                    std::size_t hi) {
    if (hi - lo <= 4) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

GaussHermiteRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: need n >= 1");
    if (n > 1000)
        throw std::invalid_argument("gauss_hermite: order capped at 1000");

    GaussHermiteRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const int half = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        // root guesses, largest first (classical asymptotic seeds)
        switch (i) {
            case 0:
                z = std::sqrt(2.0 * n + 1.0) -
                    1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
                break;
            case 1:
                z -= 1.14 * std::pow(n, 0.426) / z;
                break;
            case 2:
                z = 1.86 * z - 0.86 * rule.nodes[0];
                break;
            case 3:
                z = 1.91 * z - 0.91 * rule.nodes[1];
                break;
            default:
                z = 2.0 * z - rule.nodes[i - 2];
        }

        double deriv = 0.0;
        bool settled = false;
        for (int it = 0; it < 100; ++it) {
            double qnm1, qn;
            damped_pair(n, z, qnm1, qn);
            // d/dz q_n = sqrt(2n) q_{n-1} - z q_n
            deriv = std::sqrt(2.0 * n) * qnm1 - z * qn;
            const double dz = qn / deriv;
            z -= dz;
            if (std::abs(dz) <= 3e-14 * std::max(1.0, std::abs(z))) {
                settled = true;
                break;
            }
        }
        if (!settled)
            throw ConvergenceError("gauss_hermite: Newton iteration stalled");

        // adjusted weight 2/deriv^2 (already carries the e^{+z^2} factor)
        rule.nodes[i] = z;
        rule.weights[i] = 2.0 / (deriv * deriv);
        rule.nodes[n - 1 - i] = -z;
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    if (n % 2 == 1) rule.nodes[half - 1] = 0.0;  // exact center
    return rule;
}

int node_count_for_span(double span) {
    // Base 64 nodes cover span 8 (undisplaced packets); beyond that the
    // displaced-Gaussian error term scales like (d^2 e / 2n)^n, so grow the
    // count quadratically in the excess span.
    const double d = std::max(0.0, span - 8.0);
    const double raw = 64.0 + std::ceil(1.5 * d * d + 4.0 * d);
    return static_cast<int>(std::min(320.0, std::max(64.0, raw)));
}

QuadratureSpec default_quadrature_spec(const ECSParams& params) {
    params.validate();
    QuadratureSpec spec;
    spec.eps_span =
        8.0 + params.eps0() + 2.0 * std::sqrt(2.0 * params.m + 1.0);
    return spec;
}

namespace {

struct SimpsonCtl {
    int remaining;
    double tol_floor;  // absolute resolution limit, a few ulps of the scale
};

// Halving the tolerance with every split is the classic scheme, but taken
// literally it never terminates once the leaf target sinks under rounding
// noise (both shrink by ~2x per level, so the ratio freezes). The floor
// stops that, and the depth cap bounds stack use even for absurd budgets.
double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth, SimpsonCtl& ctl) {
    if (ctl.remaining-- <= 0)
        throw ConvergenceError(
            "integrate_density: subdivision budget exhausted before the "
            "requested tolerance was met");
    if (depth > 60)
        throw ConvergenceError(
            "integrate_density: interval split below representable width "
            "before the requested tolerance was met");
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = g(lm), frm = g(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * std::max(tol, ctl.tol_floor))
        return left + right + delta / 15.0;
    return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1,
                            ctl) +
           adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1,
                            ctl);
}

}  // namespace

double integrate_density(const std::function<double(double)>& f,
                         const QuadratureSpec& spec,
                         const OscillatorConfig& osc, int weight_power) {
    osc.validate();
    if (weight_power < 0 || weight_power > 2)
        throw std::invalid_argument(
            "integrate_density: weight_power must be 0, 1 or 2");
    if (!(spec.eps_span > 0.0))
        throw std::invalid_argument("integrate_density: span must be positive");
    if (!(spec.rel_tol > 0.0))
        throw std::invalid_argument(
            "integrate_density: rel_tol must be positive");

    const double gamma = osc.gamma();
    double integral_eps = 0.0;

    if (spec.method == QuadMethod::FixedNodeGaussian) {
        const GaussHermiteRule rule =
            gauss_hermite(node_count_for_span(spec.eps_span));
        std::vector<double> terms(rule.nodes.size());
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double x = rule.nodes[i];
            terms[i] = rule.weights[i] * pow_int(x, weight_power) * f(x);
        }
        integral_eps = pairwise_sum(terms, 0, terms.size());
    } else {
        auto g = [&](double e) { return pow_int(e, weight_power) * f(e); };
        const double a = -spec.eps_span, b = spec.eps_span;
        // Sample a uniform 65-point grid up front. It serves two purposes:
        // an L1 magnitude estimate for the relative tolerance (unlike the
        // signed integral, the L1 norm cannot cancel to zero for odd weight
        // powers), and the seed values for 32 base panels. Starting the
        // recursion from narrow base panels matters: a cold start on the
        // full span can see only zeros at its five sample points and accept
        // a subtree that actually contains the whole packet.
        constexpr int kPanels = 32;
        double probe[2 * kPanels + 1];
        double l1 = 0.0;
        for (int i = 0; i <= 2 * kPanels; ++i) {
            probe[i] = g(a + (b - a) * i / (2 * kPanels));
            l1 += std::abs(probe[i]);
        }
        l1 *= (b - a) / (2 * kPanels + 1);
        const double scale = std::max(l1, 1e-3);
        SimpsonCtl ctl{spec.max_subdivisions,
                       2.0 * std::numeric_limits<double>::epsilon() * scale};
        const double h = (b - a) / kPanels;
        std::vector<double> parts(kPanels);
        for (int i = 0; i < kPanels; ++i) {
            const double pa = a + i * h;
            const double fa = probe[2 * i], fm = probe[2 * i + 1],
                         fb = probe[2 * i + 2];
            const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
            parts[i] =
                adaptive_simpson(g, pa, pa + h, fa, fm, fb, whole,
                                 spec.rel_tol * scale / kPanels, 0, ctl);
        }
        integral_eps = pairwise_sum(parts, 0, parts.size());
    }

    // d x = d eps / gamma, and each x weight contributes another 1/gamma
    return integral_eps / pow_int(gamma, weight_power + 1);
}

}  // namespace ecs
