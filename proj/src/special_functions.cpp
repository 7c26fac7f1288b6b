#include "ecs/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ecs {

namespace {

// Shared recurrence kernel for real and complex arguments.
template <typename T>
T hermite_imp(int n, T x) {
    T hkm1 = T(1);  // H_0
    if (n == 0) return hkm1;
    T hk = 2.0 * x;  // H_1
    for (int k = 1; k < n; ++k) {
        T next = 2.0 * x * hk - 2.0 * static_cast<double>(k) * hkm1;
        hkm1 = hk;
        hk = next;
    }
    return hk;
}

void require_order(int n, const char* who) {
    if (n < 0)
        throw std::invalid_argument(std::string(who) +
                                    ": order must be nonnegative");
}

}  // namespace

double hermite(int n, double x) {
    require_order(n, "hermite");
    return hermite_imp(n, x);
}

std::complex<double> hermite(int n, std::complex<double> z) {
    require_order(n, "hermite");
    return hermite_imp(n, z);
}

PolySequence hermite_sequence(int n_max, double x) {
    require_order(n_max, "hermite_sequence");
    PolySequence seq;
    seq.argument = x;
    seq.values.resize(n_max + 1);
    seq.values[0] = 1.0;
    if (n_max == 0) return seq;
    seq.values[1] = 2.0 * x;
    for (int k = 1; k < n_max; ++k)
        seq.values[k + 1] = 2.0 * x * seq.values[k] - 2.0 * k * seq.values[k - 1];
    return seq;
}

double ecs_norm_poly(int m, double beta) {
    require_order(m, "ecs_norm_poly");
    if (beta < 0.0)
        throw std::invalid_argument("ecs_norm_poly: beta must be >= 0");
    // term_r = C(m,r) beta^r / r!, updated by the exact ratio
    // term_{r+1}/term_r = beta (m - r) / (r+1)^2. All terms positive.
    double sum = 1.0;
    double term = 1.0;
    for (int r = 0; r < m; ++r) {
        term *= beta * static_cast<double>(m - r) /
                (static_cast<double>(r + 1) * static_cast<double>(r + 1));
        sum += term;
    }
    return sum;
}

SeriesResult shifted_hermite_sum(int m, std::complex<double> s, double eps,
                                 int terms, double rel_tol) {
    require_order(m, "shifted_hermite_sum");
    if (terms <= 0)
        throw std::invalid_argument("shifted_hermite_sum: term budget must be positive");
    if (rel_tol <= 0.0)
        throw std::invalid_argument("shifted_hermite_sum: rel_tol must be positive");

    // March H_k(eps) up to the starting index m, then stream the sum,
    // updating the coefficient s^n/n! incrementally.
    double hkm1 = 0.0, hk = 1.0;
    for (int k = 0; k < m; ++k) {
        double next = 2.0 * eps * hk - 2.0 * static_cast<double>(k) * hkm1;
        hkm1 = hk;
        hk = next;
    }

    SeriesResult res;
    std::complex<double> sum = 0.0;
    std::complex<double> coeff = 1.0;
    int streak = 0;  // consecutive increments below tolerance
    int k = m;
    for (int n = 0; n < terms; ++n) {
        std::complex<double> next_sum = sum + coeff * hk;
        double scale = std::max(std::abs(next_sum),
                                std::numeric_limits<double>::min());
        if (std::abs(next_sum - sum) <= rel_tol * scale) {
            // three consecutive partial sums agree once two successive
            // increments are below tolerance
            if (++streak >= 2) {
                res.value = next_sum;
                res.converged = true;
                res.terms_used = n + 1;
                return res;
            }
        } else {
            streak = 0;
        }
        sum = next_sum;
        double next_h = 2.0 * eps * hk - 2.0 * static_cast<double>(k) * hkm1;
        hkm1 = hk;
        hk = next_h;
        ++k;
        coeff *= s / static_cast<double>(n + 1);
    }
    res.value = sum;
    res.converged = false;
    res.terms_used = terms;
    return res;
}

std::complex<double> shifted_hermite_closed(int m, std::complex<double> s,
                                            double eps) {
    require_order(m, "shifted_hermite_closed");
    return std::exp(-s * s + 2.0 * s * eps) *
           hermite(m, std::complex<double>(eps) - s);
}

}  // namespace ecs
