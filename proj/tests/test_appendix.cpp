#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "singres/appendix.hpp"
#include "singres/contour.hpp"
#include "singres/errors.hpp"
#include "singres/kernels.hpp"

using namespace singres;

TEST_CASE("bound constants") {
    const BoundConstants& c = bound_constants();
    CHECK(c.C == doctest::Approx(oracle::kSinFactorSup).epsilon(1e-12));
    CHECK(c.C >= 2.0);
    CHECK(c.D_cauchy == doctest::Approx(c.C + 2 * c.C * c.C));
    CHECK(c.D_window == doctest::Approx(4 * c.C));
    // fitted K is a certificate: above the true sup, within the 2% margin
    CHECK(c.K > oracle::kSiRatioSup);
    CHECK(c.K < 1.021 * oracle::kSiRatioSup);
    CHECK(c.K >= oracle::kSiAtPi * (1 + kPi) / kPi);
    CHECK(c.K >= kPi / 2);
}

TEST_CASE("lemma 1 point and grid") {
    const BoundConstants& c = bound_constants();
    CHECK(check_lemma1(1.0, 1.0, 10.0, c));
    const BoundCheck b = cauchy_bound(1.0, 1.0, 10.0, c);
    CHECK(b.value == doctest::Approx(std::abs(cauchy_kernel_integral(1.0, 1.0, 10.0))));
    CHECK(b.bound == doctest::Approx(10.0 * c.D_cauchy / (10.0 * 9.0)));

    for (GridSummary s : {lemma1_grid(5), lemma1_tail_grid(5)}) {
        CAPTURE(s.name);
        CHECK(s.checks == 125);
        CHECK(s.failures == 0);
        CHECK(s.passed(1.01));
    }
}

TEST_CASE("lemma 1 large-A scaling") {
    const BoundConstants& c = bound_constants();
    // bound * r A tends to D; value * r A stays below D
    for (double r : {0.3, 2.0}) {
        double prev = 0.0;
        for (double A : {1e2, 1e3, 1e4, 1e5}) {
            const BoundCheck b = cauchy_bound(r, 1.0, A, c);
            CHECK(b.holds());
            CHECK(b.value * r * A < c.D_cauchy);
            prev = b.bound * r * A;
        }
        CHECK(prev == doctest::Approx(c.D_cauchy).epsilon(1e-3 / r));
    }
}

TEST_CASE("lemma 3 and corollaries") {
    const BoundConstants& c = bound_constants();
    // y = 0: the integral is a logarithm
    for (double k0 : {0.5, 1.0, -2.0})
        for (double f : {0.1, 0.5, 0.9}) {
            const double eps = f * std::abs(k0);
            const BoundCheck b = window_bound(0.0, eps, k0, c);
            CHECK(b.value == doctest::Approx(std::abs(std::log((k0 + eps) / (k0 - eps)))).epsilon(1e-12));
            CHECK(b.bound == doctest::Approx(eps * c.D_window / ((std::abs(k0) - eps) * 2.0)));
            CHECK(check_lemma3(0.0, eps, k0, c));
        }
    CHECK_THROWS_AS(window_bound(1.0, 1.0, 1.0, c), DomainError);

    // quadrature against closed forms
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-6.0, 6.0), f(0.05, 0.9);
    for (int i = 0; i < 30; ++i) {
        const double x = u(rng), xp = u(rng), eps = f(rng);
        CHECK(window_sin_sin_bound(x, xp, eps, 1.0, c).value ==
              doctest::Approx(std::abs(window_sin_sin(x, xp, 1.0, eps))).epsilon(1e-10));
        const double y = std::abs(u(rng)) * 5;
        // Corollary 2 substitution: tau = k + k0
        CHECK(shifted_window_bound(y, eps, 1.0, c).value ==
              doctest::Approx(std::abs(exp_over_k_integral(2.0 - eps, 2.0 + eps, y))).epsilon(1e-10));
        CHECK(window_bound(y, eps, 1.0, c).value ==
              doctest::Approx(std::abs(exp_over_k_integral(1.0 - eps, 1.0 + eps, y))).epsilon(1e-10));
    }

    for (GridSummary s : {lemma3_grid(5), corollary1_grid(5), corollary2_grid(5)}) {
        CAPTURE(s.name);
        CHECK(s.failures == 0);
        CHECK(s.passed(1.01));
    }
}

TEST_CASE("si bound") {
    const double K = bound_constants().K;
    const BoundCheck zero = si_bound(0.0, K);
    CHECK(zero.value == 0.0);
    CHECK(zero.bound == 0.0);
    CHECK(check_si_bound(0.0, K));
    CHECK(check_si_bound(kPi, K));
    CHECK_FALSE(check_si_bound(kPi, oracle::kSiAtPi * (1 + kPi) / kPi * 0.999));
    CHECK(check_si_bound(1e8, K));
    // pi/2 <= K is forced by large r
    CHECK_FALSE(check_si_bound(1e8, 1.5));
    const GridSummary s = si_grid(9);
    CHECK(s.failures == 0);
    CHECK(s.passed(1.01));
}

TEST_CASE("fitted constants do not decrease under refinement") {
    double K_prev = 0.0;
    for (int p : {17, 33, 65, 129, 257, 513}) {
        const double K = fit_si_constant(p);
        CHECK(K >= K_prev);
        K_prev = K;
    }
    CHECK(K_prev <= oracle::kSiRatioSup);

    GridSummary prev[6];
    for (int n : {3, 5, 9}) {
        const auto grids = all_bound_grids(n, 2);
        REQUIRE(grids.size() == 6);
        for (std::size_t i = 0; i < grids.size(); ++i) {
            CAPTURE(grids[i].name);
            CHECK(grids[i].fitted >= prev[i].fitted);
            CHECK(grids[i].failures == 0);
            prev[i] = grids[i];
        }
    }
    // every fitted constant sits under the constant used in the bound
    const BoundConstants& c = bound_constants();
    CHECK(prev[0].fitted < c.D_cauchy);
    CHECK(prev[1].fitted < 4.0);
    CHECK(prev[2].fitted < c.D_window);
    CHECK(prev[3].fitted < c.D_window);
    CHECK(prev[4].fitted < c.D_window);
    CHECK(prev[5].fitted < c.K);
}
