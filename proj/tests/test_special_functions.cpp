#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ecs/special_functions.hpp"

using std::complex;

TEST_CASE("hermite matches hand-expanded polynomials") {
    // H_0..H_4 written out explicitly.
    const double xs[] = {-2.5, -1.0, -0.3, 0.0, 0.7, 1.0, 2.0, 3.6};
    for (double x : xs) {
        CHECK(ecs::hermite(0, x) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(ecs::hermite(1, x) == doctest::Approx(2 * x).epsilon(1e-15));
        CHECK(ecs::hermite(2, x) ==
              doctest::Approx(4 * x * x - 2).epsilon(1e-14));
        CHECK(ecs::hermite(3, x) ==
              doctest::Approx(8 * x * x * x - 12 * x).epsilon(1e-14));
        CHECK(ecs::hermite(4, x) ==
              doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12)
                  .epsilon(1e-13));
    }
    CHECK(ecs::hermite(3, 2.0) == doctest::Approx(40.0).epsilon(1e-15));
}

TEST_CASE("hermite recurrence and parity hold on random points") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = dist(rng);
        const int n = 1 + static_cast<int>(rng() % 14);
        // H_{n+1} = 2x H_n - 2n H_{n-1}
        const double lhs = ecs::hermite(n + 1, x);
        const double rhs =
            2 * x * ecs::hermite(n, x) - 2 * n * ecs::hermite(n - 1, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        // H_n(-x) = (-1)^n H_n(x)
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(ecs::hermite(n, -x) ==
              doctest::Approx(sign * ecs::hermite(n, x)).epsilon(1e-12));
    }
}

TEST_CASE("complex hermite agrees with the real overload and known value") {
    CHECK(ecs::hermite(2, complex<double>(0.0, 1.0)).real() ==
          doctest::Approx(-6.0).epsilon(1e-15));
    CHECK(ecs::hermite(2, complex<double>(0.0, 1.0)).imag() ==
          doctest::Approx(0.0).epsilon(1e-15));
    for (double x : {-1.3, 0.4, 2.2}) {
        const auto z = ecs::hermite(5, complex<double>(x, 0.0));
        CHECK(z.real() == doctest::Approx(ecs::hermite(5, x)).epsilon(1e-14));
        CHECK(z.imag() == 0.0);
    }
}

TEST_CASE("hermite_sequence matches individual evaluations") {
    const auto seq = ecs::hermite_sequence(10, 1.3);
    REQUIRE(seq.values.size() == 11);
    CHECK(seq.argument == 1.3);
    for (int k = 0; k <= 10; ++k)
        CHECK(seq.values[k] ==
              doctest::Approx(ecs::hermite(k, 1.3)).epsilon(1e-13));
}

TEST_CASE("norm polynomial: explicit low orders") {
    // N_0 = 1, N_1 = 1 + b, N_2 = 1 + 2b + b^2/2
    for (double b : {0.0, 0.3, 1.0, 2.0, 7.5}) {
        CHECK(ecs::ecs_norm_poly(0, b) == doctest::Approx(1.0));
        CHECK(ecs::ecs_norm_poly(1, b) ==
              doctest::Approx(1.0 + b).epsilon(1e-15));
        CHECK(ecs::ecs_norm_poly(2, b) ==
              doctest::Approx(1.0 + 2 * b + b * b / 2).epsilon(1e-15));
    }
    CHECK(ecs::ecs_norm_poly(2, 2.0) == doctest::Approx(7.0).epsilon(1e-15));
}

TEST_CASE("norm polynomial equals Laguerre L_m(-beta) by recurrence") {
    // (n+1) L_{n+1}(x) = (2n+1-x) L_n(x) - n L_{n-1}(x), evaluated at
    // x = -beta. Independent of the binomial-sum route used internally.
    for (double beta : {0.25, 1.0, 4.0, 9.0, 16.0}) {
        const double x = -beta;
        double lm1 = 1.0;       // L_0
        double l = 1.0 - x;     // L_1
        CHECK(ecs::ecs_norm_poly(0, beta) == doctest::Approx(lm1));
        CHECK(ecs::ecs_norm_poly(1, beta) ==
              doctest::Approx(l).epsilon(1e-14));
        for (int n = 1; n < 12; ++n) {
            const double lnext = ((2 * n + 1 - x) * l - n * lm1) / (n + 1);
            lm1 = l;
            l = lnext;
            CHECK(ecs::ecs_norm_poly(n + 1, beta) ==
                  doctest::Approx(l).epsilon(1e-12));
        }
    }
}

TEST_CASE("shifted sum: m = 0 reduces to the plain generating function") {
    // sum_n s^n H_n(eps) / n! = exp(-s^2 + 2 s eps)
    const complex<double> s(0.4, -0.3);
    const double eps = 1.1;
    const auto r = ecs::shifted_hermite_sum(0, s, eps, 60);
    const auto want = std::exp(-s * s + 2.0 * s * eps);
    CHECK(r.converged);
    CHECK(std::abs(r.value - want) <= 1e-13 * std::abs(want));
}

TEST_CASE("shifted sum matches closed form across orders") {
    for (int m : {0, 1, 2, 3, 5, 8}) {
        for (double sr : {-0.8, 0.5, 1.2}) {
            const complex<double> s(sr, 0.2);
            for (double eps : {-2.0, 0.0, 1.7}) {
                const auto sum = ecs::shifted_hermite_sum(m, s, eps, 60);
                const auto closed = ecs::shifted_hermite_closed(m, s, eps);
                const double scale = std::max(std::abs(closed), 1.0);
                CHECK(std::abs(sum.value - closed) <= 1e-9 * scale);
            }
        }
    }
}

TEST_CASE("shifted sum: frozen reference values") {
    // m=2, s=1/2, eps=1: closed form is exp(3/4) * H_2(1/2) * (-1)
    //   H_2(1/2) = 4*(1/4) - 2 = -1, so the value is -exp(0.75).
    const auto r = ecs::shifted_hermite_sum(2, complex<double>(0.5, 0.0), 1.0,
                                            40);
    CHECK(r.converged);
    CHECK(r.value.real() ==
          doctest::Approx(-2.1170000166126746685).epsilon(1e-13));
    CHECK(std::abs(r.value.imag()) < 1e-14);

    const auto c =
        ecs::shifted_hermite_closed(3, complex<double>(0.3, -0.4), 1.5);
    CHECK(c.real() ==
          doctest::Approx(10.551332081725816183).epsilon(1e-13));
    CHECK(c.imag() ==
          doctest::Approx(24.080452813695229962).epsilon(1e-13));
}

TEST_CASE("shifted sum reports its convergence honestly") {
    // Mild arguments stabilize quickly and say so.
    auto quick = ecs::shifted_hermite_sum(1, complex<double>(0.3, 0.0), 0.5,
                                          60);
    CHECK(quick.converged);
    CHECK(quick.terms_used < 40);

    // At s=-1.5, eps=3 the partial sums swing through +-1e2 before the
    // tail dies; within a 60-term budget the streak detector cannot see
    // two successive negligible terms, so converged stays false even
    // though the returned value is accurate. Callers get both facts.
    auto hard = ecs::shifted_hermite_sum(0, complex<double>(-1.5, 0.0), 3.0,
                                         60);
    CHECK_FALSE(hard.converged);
    const auto want = ecs::shifted_hermite_closed(0, complex<double>(-1.5, 0.0),
                                                  3.0);
    CHECK(std::abs(hard.value - want) <= 1e-8 * std::max(1.0, std::abs(want)));

    // With a larger budget the same cell converges cleanly.
    auto easy = ecs::shifted_hermite_sum(0, complex<double>(-1.5, 0.0), 3.0,
                                         200);
    CHECK(easy.converged);
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS_AS(ecs::hermite(-1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ecs::ecs_norm_poly(-2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(
        ecs::shifted_hermite_sum(-1, complex<double>(0.1, 0.0), 0.0, 10),
        std::invalid_argument);
    CHECK_THROWS_AS(ecs::ecs_norm_poly(2, -0.5), std::invalid_argument);
}
