#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "singres/delta_model.hpp"
#include "singres/errors.hpp"
#include "singres/quadrature.hpp"
#include "singres/smooth_model.hpp"

using namespace singres;

namespace {

const double kSqrt2Pi = std::sqrt(2 * kPi);
const cplx kZ(0, 2);

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

template <class F>
cplx second_derivative(F&& f, double x, double h = 1e-3) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

template <class F>
cplx first_derivative(F&& f, double x, double h = 1e-3) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("smooth: construction rules") {
    CHECK_THROWS_AS(SmoothPotential(cplx(1, 2), 1.0), ParameterError);
    CHECK_THROWS_AS(SmoothPotential(kZ, cplx(0, 1)), ParameterError);
    CHECK_NOTHROW(SmoothPotential::general(4.0, 2.0));
    // Eigenfunctions refuse non-imaginary z and complex alpha.
    CHECK_THROWS_AS(psi_plus_smooth(SmoothPotential::general(4.0, 2.0), 0.1, 0.5), ParameterError);
    CHECK_THROWS_AS(psi_plus_smooth(SmoothPotential(kZ, cplx(1, 1)), 0.1, 0.5), ParameterError);
}

TEST_CASE("smooth: mpmath oracle values") {
    for (const auto& row : oracle::kSmoothOracle) {
        SmoothPotential pot(row.z, row.alpha);
        CAPTURE(row.x);
        CAPTURE(row.alpha);
        CHECK(rel(psi_plus_smooth(pot, row.x, row.k), row.psi_plus) < 1e-10);
        CHECK(rel(psi_minus_smooth(pot, row.x, row.k), row.psi_minus) < 1e-10);
    }
}

TEST_CASE("smooth: the two representations agree") {
    SmoothPotential pot(kZ, 0.5);
    for (cplx k : {cplx(1.2), cplx(0.3, 0.1), cplx(-2.0, 0.0)}) {
        for (double x : {0.0, 0.3, -0.3}) {
            CAPTURE(x);
            CHECK(rel(psi_plus_smooth(pot, x, k, Representation::right_half),
                      psi_plus_smooth(pot, x, k, Representation::left_half)) < 1e-10);
            CHECK(rel(psi_minus_smooth(pot, x, k, Representation::right_half),
                      psi_minus_smooth(pot, x, k, Representation::left_half)) < 1e-10);
        }
    }
}

TEST_CASE("smooth: Schrodinger residual") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uk(0.2, 2.5);
    for (double alpha : {0.5, 2.0}) {
        SmoothPotential pot(kZ, alpha);
        for (int i = 0; i < 10; ++i) {
            double x = ux(rng);
            cplx k(uk(rng), 0.05);
            for (auto* f : {&psi_plus_smooth, &psi_minus_smooth}) {
                auto g = [&](double t) { return (*f)(pot, t, k, Representation::automatic); };
                cplx res = -second_derivative(g, x) + potential(pot, x) * g(x) - k * k * g(x);
                CHECK(std::abs(res) < 1e-6);
            }
        }
    }
}

TEST_CASE("smooth: hypergeometric change of variables") {
    SmoothPotential pot(kZ, 0.8);
    cplx k(1.4, 0.0);
    const double alpha = 0.8;
    cplx a = pot.a(), b = pot.b(), c = 1.0 - kI * k / alpha;
    // phi(xi) = e^{-ikx} psi(x) for the right-half form, up to its constant prefactor.
    auto phi = [&](double xi) {
        double x = std::log(1.0 / xi - 1.0) / (2 * alpha);
        return std::exp(-kI * k * x) * psi_plus_smooth(pot, x, k);
    };
    for (double xi : {0.1, 0.25, 0.4}) {
        cplx f = phi(xi);
        cplx d1 = first_derivative(phi, xi, 1e-4);
        cplx d2 = second_derivative(phi, xi, 1e-3);
        cplx res = xi * (xi - 1.0) * d2 + ((a + b + 1.0) * xi - c) * d1 + a * b * f;
        CHECK(std::abs(res) / std::abs(f) < 1e-8);
    }
}

TEST_CASE("smooth: asymptotics and singular state") {
    for (double alpha : {0.5, 2.0}) {
        SmoothPotential pot(kZ, alpha);
        double x = -20.0 / alpha;
        for (cplx k : {cplx(0.7), cplx(2.2)})
            CHECK(std::abs(psi_minus_smooth(pot, x, k) - std::exp(-kI * k * x) / kSqrt2Pi) < 1e-8);
        for (double y : {-1.5, 0.0, 0.6, 2.0}) {
            CAPTURE(y);
            CHECK(rel(kSqrt2Pi * psi_minus_smooth(pot, y, 1.0), psi_zero_smooth(pot, y)) < 1e-10);
            CHECK(std::abs(std::abs(psi_zero_smooth(pot, y)) - 1.0) < 1e-14);
        }
        CHECK(std::abs(psi_zero_smooth(pot, 0.0) - std::pow(cplx(2.0), kZ / (2 * alpha))) < 1e-14);
    }
}

TEST_CASE("smooth: zero modes of the first-order factors") {
    SmoothPotential pot(kZ, 0.7);
    SuperpotentialSpec chi{SuperpotentialFamily::tanh, kZ, 0.7};
    for (double x : {-2.0, -0.4, 0.3, 1.9}) {
        auto f = [&](double t) { return psi_zero_smooth(pot, t); };
        CHECK(std::abs(first_derivative(f, x) - superpotential(chi, x) * f(x)) < 1e-10);
        CHECK(std::abs(psi_zero_smooth_dx(pot, x).derivative - superpotential(chi, x) * f(x)) < 1e-14);
        // phi+ = [2 cosh]^{-z/2alpha} is annihilated by d + chi.
        SmoothPotential flipped(-kZ, 0.7);
        auto g = [&](double t) { return psi_zero_smooth(flipped, t); };
        CHECK(std::abs(first_derivative(g, x) + superpotential(chi, x) * g(x)) < 1e-10);
    }
}

TEST_CASE("smooth: mirror relation") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), uk(-2.5, 2.5);
    for (double alpha : {0.5, 1.5}) {
        SmoothPotential pot(kZ, alpha);
        for (int i = 0; i < 20; ++i) {
            double x = ux(rng);
            cplx k(uk(rng), 0.1);
            cplx ratio = psi_minus_smooth(pot, -x, k) / psi_plus_smooth(pot, x, k);
            CHECK(rel(ratio, mirror_factor(pot, k)) < 1e-10);
        }
    }
}

TEST_CASE("smooth: Legendre reduction") {
    SmoothPotential pot(kZ, 0.5);
    const double alpha = 0.5;
    for (cplx k : {cplx(1.2), cplx(0.4, 0.2)}) {
        cplx mu = kI * k / alpha, nu = -kZ / (2 * alpha);
        for (double x : {-1.0, 0.0, 0.7, 1.6}) {
            cplx viaP = singres::gamma(1.0 - mu) * legendre_p(mu, nu, -std::tanh(alpha * x)) / kSqrt2Pi;
            CHECK(rel(psi_minus_smooth(pot, x, k), viaP) < 1e-8);
        }
        double x = 0.7;
        cplx pref = transmission_gamma_factor(pot, k) * (2.0 * k / (2.0 * k + kI * kZ)) * singres::gamma(1.0 - mu);
        cplx ratio = legendre_p(mu, nu, std::tanh(alpha * x)) / (kSqrt2Pi * psi_plus_smooth(pot, x, k) / pref);
        CHECK(std::abs(ratio - 1.0) < 1e-8);
    }
}

TEST_CASE("smooth: Wronskian is ik/pi") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uk(-3.0, 3.0);
    for (double alpha : {0.5, 2.0, 10.0}) {
        SmoothPotential pot(kZ, alpha);
        for (int i = 0; i < 5; ++i) {
            cplx k(uk(rng), 0.0);
            for (double x : {-3.0, -1.0, 0.5, 2.0}) CHECK(std::abs(wronskian_smooth(pot, k, x) - kI * k / kPi) < 1e-9);
        }
    }
}

TEST_CASE("smooth: large alpha approaches the delta model") {
    DeltaPotential delta(kZ);
    const cplx k = 1.3;
    double prev_p = 0.0, prev_m = 0.0;
    for (double alpha : {10.0, 20.0, 40.0}) {
        SmoothPotential pot(kZ, alpha);
        double ep = 0.0, em = 0.0;
        for (int i = 0; i <= 400; ++i) {
            double x = -2.0 + 4.0 * i / 400;
            ep = std::max(ep, std::abs(psi_plus_smooth(pot, x, k) - psi_plus(delta, x, k)));
            em = std::max(em, std::abs(psi_minus_smooth(pot, x, k) - psi_minus(delta, x, k)));
        }
        if (prev_p > 0.0) {
            CHECK(prev_p / ep == doctest::Approx(2.0).epsilon(0.2));
            CHECK(prev_m / em == doctest::Approx(2.0).epsilon(0.2));
        }
        prev_p = ep;
        prev_m = em;
    }
    SmoothPotential pot40(kZ, 40.0);
    for (double x : {-0.8, 0.8}) {
        CHECK(std::abs(psi_plus_smooth(pot40, x, k) - psi_plus(delta, x, k)) < 5e-3);
        CHECK(std::abs(psi_minus_smooth(pot40, x, k) - psi_minus(delta, x, k)) < 5e-3);
    }
    GreenQuery q{0.8, -0.5, cplx(1.69, 0.2)};
    CHECK(std::abs(green_smooth(pot40, q) - green(delta, q)) < 5e-3);
}

TEST_CASE("smooth: Green function") {
    SmoothPotential pot(kZ, 1.5);
    cplx lambda(0.8, 0.3);
    double xp = -0.6;
    auto G = [&](double t) { return green_smooth(pot, {t, xp, lambda}); };
    for (double x : {1.3, -1.7}) CHECK(std::abs(-second_derivative(G, x) + (potential(pot, x) - lambda) * G(x)) < 1e-6);
    double d = 1e-6;
    cplx right = (G(xp + 2 * d) - G(xp + d)) / d;
    cplx left = (G(xp - d) - G(xp - 2 * d)) / d;
    CHECK(std::abs(-(right - left) - 1.0) < 1e-5);
    cplx prev = 0.0;
    for (double off : {1e-4, 1e-6}) {
        cplx l = 1.0 + cplx(off, off);
        cplx v = (l - 1.0) * green_smooth(pot, {0.4, -0.2, l});
        CHECK(std::abs(v) > 0.1);
        if (prev != 0.0) CHECK(std::abs(v - prev) < 1e-3);
        prev = v;
    }
}

TEST_CASE("smooth: potential and partner potentials") {
    SmoothPotential pot(kZ, 0.9);
    CHECK(std::abs(potential(pot, 800.0)) == 0.0);
    CHECK(std::abs(potential(pot, -50.0)) < 1e-30);
    CHECK(std::abs(potential(SmoothPotential::general(2.0, 1.0), 0.3)) == 0.0);
    SuperpotentialSpec chi{SuperpotentialFamily::tanh, kZ, 0.9};
    for (double x : {-1.2, 0.0, 0.5, 3.0}) {
        CHECK(std::abs(partner_potential(chi, x, +1) - kZ * kZ / 4.0 - potential(pot, x)) < 1e-10);
        // z -> -z gives the other partner.
        SmoothPotential flipped(-kZ, 0.9);
        CHECK(std::abs(partner_potential(chi, x, -1) - kZ * kZ / 4.0 - potential(flipped, x)) < 1e-10);
    }
}

TEST_CASE("smooth: factorization on sample functions") {
    SuperpotentialSpec chi{SuperpotentialFamily::tanh, kZ, 0.9};
    for (int n = 0; n < 20; ++n) {
        double c = -1.0 + 0.1 * n;
        double w = 0.5 + 0.05 * n;
        auto f = [&](double t) { return std::exp(-(t - c) * (t - c) / (2 * w * w) + kI * 0.3 * double(n) * t); };
        auto fprime = [&](double t) { return f(t) * (-(t - c) / (w * w) + kI * 0.3 * double(n)); };
        auto qminus = [&](double t) { return fprime(t) - superpotential(chi, t) * f(t); };
        double x = 0.37 - 0.05 * n;
        cplx lhs = -first_derivative(qminus, x) - superpotential(chi, x) * qminus(x);
        cplx rhs = -second_derivative(f, x) + partner_potential(chi, x, +1) * f(x);
        CHECK(std::abs(lhs - rhs) < 1e-6);
    }
}

TEST_CASE("smooth: superpotential families tend to (z/2) sign x") {
    SuperpotentialSpec t{SuperpotentialFamily::tanh, kZ, 20.0};
    CHECK(std::abs(superpotential(t, 1.0) - kZ / 2.0) < std::exp(-40.0));
    for (double x : {-0.7, 0.4}) {
        cplx target = superpotential({SuperpotentialFamily::sign, kZ}, x);
        double prev_s = 1e9, prev_a = 1e9;
        for (double eps : {0.1, 0.01, 0.001}) {
            double es = std::abs(superpotential({SuperpotentialFamily::sqrt_regularized, kZ, eps}, x) - target);
            double ea = std::abs(superpotential({SuperpotentialFamily::arctan_regularized, kZ, eps}, x) - target);
            CHECK(es < prev_s);
            CHECK(ea < prev_a);
            prev_s = es;
            prev_a = ea;
        }
        CHECK(prev_s < 1e-5);
        // arctan tail: |z| eps / (pi |x|)
        CHECK(prev_a < 1.01 * std::abs(kZ) * 0.001 / (kPi * std::abs(x)));
    }
}

TEST_CASE("smooth: reflection amplitude") {
    for (double k : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(reflection_amplitude_smooth(SmoothPotential::general(4.0, 2.0), k)) <= 1e-10);
        CHECK(std::abs(reflection_amplitude_smooth(SmoothPotential::general(4.04, 2.0), k)) > 1e-3);
    }
    // n = 2 and the pole-adjacent k -> 0 route.
    CHECK(std::abs(reflection_amplitude_smooth(SmoothPotential::general(8.0, 2.0), 0.7)) <= 1e-10);
    CHECK(std::abs(reflection_amplitude_smooth(SmoothPotential::general(4.0, 2.0), 1e-12)) <= 1e-10);
    // Matches the x -> -infinity coefficient of psi_plus.
    SmoothPotential pot(kZ, 1.1);
    cplx k = 0.9;
    double x = -25.0;
    cplx tail = (kSqrt2Pi * psi_plus_smooth(pot, x, k) - std::exp(kI * k * x)) / std::exp(-kI * k * x);
    CHECK(std::abs(tail - reflection_amplitude_smooth(pot, k)) < 1e-9);
    // Large alpha: delta-model R with an O(1/alpha^2) gap.
    DeltaPotential delta(kZ);
    const cplx kk = 1.3;
    double prev = 0.0;
    for (double alpha : {10.0, 20.0, 40.0}) {
        double e = std::abs(reflection_amplitude_smooth(SmoothPotential(kZ, alpha), kk) -
                            scattering_coeffs(delta, kk).reflection);
        if (prev > 0.0) CHECK(prev / e == doctest::Approx(4.0).epsilon(0.1));
        prev = e;
    }
    CHECK(prev < 1e-2);
}

TEST_CASE("smooth: binorm of the smoothed singular state") {
    for (double alpha : {0.5, 0.25}) {
        auto f = [&](double x) { return std::exp((kZ - alpha) * x); };
        auto r = integrate_adaptive(f, 0.0, 80.0 / alpha, {1e-13, 1e-13, 1000000, 64});
        CHECK(std::abs(2.0 * r.value - (-2.0 / (kZ - alpha))) < 1e-10);
    }
}

TEST_CASE("smooth: singularity weight at large alpha") {
    // Gamma(1 - z/alpha)/Gamma(1 - z/2alpha)^2 -> 1.
    double prev = 1.0;
    for (double alpha : {10.0, 20.0, 40.0}) {
        double e = std::abs(singularity_weight(SmoothPotential(kZ, alpha)) - 1.0);
        CHECK(e < prev);
        prev = e;
    }
    CHECK(prev < 5e-3);
}
