#include <doctest.h>

#include <cmath>
#include <random>

#include "singres/delta_model.hpp"
#include "singres/errors.hpp"

using namespace singres;

namespace {

const DeltaPotential kPot(cplx(0, 2));
const double kSqrt2Pi = std::sqrt(2 * kPi);

cplx random_k(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0), v(-0.5, 0.5);
    return {u(rng), v(rng)};
}

}  // namespace

TEST_CASE("delta: construction rules") {
    CHECK_THROWS_AS(DeltaPotential(cplx(1, 2)), ParameterError);
    CHECK_THROWS_AS(DeltaPotential(0.0), ParameterError);
    CHECK(kPot.k0() == 1.0);
    CHECK(DeltaPotential(cplx(0, -3)).k0() == -1.5);
}

TEST_CASE("delta: psi_plus values") {
    CHECK(std::abs(psi_plus(kPot, 1.0, 2.0) - 2.0 / kSqrt2Pi * std::exp(cplx(0, 2))) < 1e-15);
    auto left = psi_plus_dx_left(kPot, 0.0, cplx(0.7, 0.2));
    auto right = psi_plus_dx(kPot, 0.0, cplx(0.7, 0.2));
    CHECK(std::abs(left.value - right.value) < 1e-15);
    CHECK_THROWS_AS(psi_plus(kPot, 0.3, 1.0), PoleError);
    // Very close to the pole is still evaluated.
    CHECK(std::abs(psi_plus(kPot, 0.3, 1.0 + 1e-9)) > 1e7);
}

TEST_CASE("delta: psi_minus values") {
    CHECK(std::abs(psi_minus(kPot, -1.0, cplx(0.4, 0.1)) - std::exp(kI * cplx(0.4, 0.1)) / kSqrt2Pi) < 1e-15);
    CHECK(std::abs(kSqrt2Pi * psi_minus(kPot, 0.8, 1.0) - psi_zero(kPot, 0.8)) < 1e-14);
    CHECK(std::abs(kSqrt2Pi * psi_minus(kPot, -0.8, 1.0) - psi_zero(kPot, -0.8)) < 1e-14);
    // k = 0 uses the sin(kx)/k limit.
    CHECK(std::abs(psi_minus(kPot, 2.0, 0.0) - (1.0 + kPot.z() * 2.0) / kSqrt2Pi) < 1e-15);
}

TEST_CASE("delta: psi_zero") {
    CHECK(psi_zero(kPot, 0.0) == 1.0);
    CHECK(std::abs(psi_zero(kPot, kPi) + 1.0) < 1e-15);
    for (double x : {-3.0, -0.2, 1.7}) CHECK(std::abs(std::abs(psi_zero(kPot, x)) - 1.0) < 1e-15);
    // -sqrt(2 pi) lim (1 + 2k/iz) psi_plus(x;k) as k -> k0.
    for (double x : {-1.5, 0.4, 2.0}) {
        double prev = 1e9;
        for (double off : {1e-2, 1e-3, 1e-4}) {
            cplx k = 1.0 + off;
            cplx v = -kSqrt2Pi * (1.0 + 2.0 * k / (kI * kPot.z())) * psi_plus(kPot, x, k);
            double err = std::abs(v - psi_zero(kPot, x));
            CHECK(err < prev);
            prev = err;
        }
        CHECK(prev < 1e-3);
    }
}

TEST_CASE("delta: mirror relation and soot18 identities") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    const cplx iz = kI * kPot.z();
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double x = ux(rng);
        cplx k = random_k(rng);
        cplx ratio = psi_minus(kPot, -x, k) / psi_plus(kPot, x, k);
        worst = std::max(worst, std::abs(ratio - (1.0 + iz / (2.0 * k))));
        cplx id1 = psi_plus(kPot, x, k) -
                   (-iz / (2.0 * k + iz) * psi_plus(kPot, x, -k) +
                    4.0 * k * k / (4.0 * k * k + kPot.z() * kPot.z()) * psi_minus(kPot, x, -k));
        cplx id2 = psi_minus(kPot, x, k) - psi_plus(kPot, x, -k) + iz / (2.0 * k - iz) * psi_minus(kPot, x, -k);
        worst = std::max({worst, std::abs(id1), std::abs(id2)});
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("delta: values at k = iz/2 relate to psi_zero") {
    const cplx kk = kI * kPot.z() / 2.0;  // = -k0
    for (double x : {-2.0, -0.3, 0.0, 1.1}) {
        CHECK(std::abs(psi_plus(kPot, x, kk) - (psi_zero(kPot, x) / kSqrt2Pi - psi_minus(kPot, x, kk) / 2.0)) < 1e-12);
        CHECK(std::abs(psi_minus(kPot, x, kk) - (std::sqrt(2 / kPi) * psi_zero(kPot, x) - 2.0 * psi_plus(kPot, x, kk))) <
              1e-12);
    }
}

TEST_CASE("delta: Schrodinger residual and delta matching") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(0.2, 4.0);
    const double h = 1e-3;
    for (int i = 0; i < 30; ++i) {
        double x = (i % 2 ? 1.0 : -1.0) * ux(rng);
        cplx k = random_k(rng);
        for (auto* f : {&psi_plus, &psi_minus}) {
            auto g = [&](double t) { return (*f)(kPot, t, k); };
            cplx d2 = (-g(x + 2 * h) + 16.0 * g(x + h) - 30.0 * g(x) + 16.0 * g(x - h) - g(x - 2 * h)) / (12 * h * h);
            CHECK(std::abs(-d2 - k * k * g(x)) < 1e-6 * (1 + std::norm(k)));
        }
    }
    cplx k(0.6, 0.3);
    auto jump = [](ValueDerivative r, ValueDerivative l) { return r.derivative - l.derivative; };
    auto p = psi_plus_dx(kPot, 0.0, k);
    CHECK(std::abs(jump(p, psi_plus_dx_left(kPot, 0.0, k)) - kPot.z() * p.value) < 1e-12);
    auto m = psi_minus_dx(kPot, 0.0, k);
    CHECK(std::abs(jump(m, psi_minus_dx_left(kPot, 0.0, k)) - kPot.z() * m.value) < 1e-12);
    auto o = psi_zero_dx(kPot, 0.0);
    CHECK(std::abs(jump(o, psi_zero_dx_left(kPot, 0.0)) - kPot.z() * o.value) < 1e-12);
}

TEST_CASE("delta: Wronskian is ik/pi") {
    for (double x : {-3.0, -1.0, 0.5, 2.0}) CHECK(std::abs(wronskian(kPot, 1.0 + 1e-3, x) - kI * (1.0 + 1e-3) / kPi) < 1e-12);
    for (double x : {-3.0, -1.0, 0.5, 2.0}) CHECK(std::abs(wronskian(kPot, 0.0, x)) < 1e-15);
    cplx k = 1.0 + 0.25 * std::exp(kI * 2.0);  // on a deformation semicircle
    for (double x : {-3.0, -1.0, 0.5, 2.0}) CHECK(std::abs(wronskian(kPot, k, x) - kI * k / kPi) < 1e-12);
}

TEST_CASE("delta: scattering coefficients") {
    auto s = scattering_coeffs(kPot, 2.0);
    CHECK(std::abs(s.transmission - 2.0) < 1e-15);
    CHECK(std::abs(s.reflection - 1.0) < 1e-15);
    auto far = scattering_coeffs(kPot, 1e8);
    CHECK(std::abs(far.transmission - 1.0) < 1e-7);
    CHECK(std::abs(far.reflection) < 1e-7);
    auto near = scattering_coeffs(kPot, 1.0 + 1e-3);
    CHECK(std::abs(near.transmission) > 900.0);
    CHECK(singularity_distance(kPot, 1.0 + 1e-3) == doctest::Approx(1e-3));
}

TEST_CASE("delta: kernel_product decomposition") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double x = ux(rng), xp = ux(rng);
        cplx k = random_k(rng);
        worst = std::max(worst, std::abs(kernel_product(kPot, x, xp, k) - psi_plus(kPot, x, k) * psi_minus(kPot, xp, k)));
    }
    CHECK(worst < 1e-12);
    CHECK(std::abs(kernel_product(kPot, -1.0, 2.0, 0.0) - psi_plus(kPot, -1.0, 0.0) * psi_minus(kPot, 2.0, 0.0)) < 1e-12);
    cplx k(0.4, 0.1);
    CHECK(std::abs(kernel_product(kPot, 0.0, 0.0, k) - (1.0 - kI * kPot.z() / (2.0 * k + kI * kPot.z())) / (2 * kPi)) <
          1e-15);
}

TEST_CASE("delta: Green function") {
    cplx lambda(0.8, 0.3);
    double x = 1.3, xp = -0.6;
    cplx g = green(kPot, {x, xp, lambda});
    CHECK(std::abs(g - green(kPot, {xp, x, lambda})) < 1e-15);
    // (h - lambda) G = 0 away from x' and 0.
    const double h = 1e-3;
    auto G = [&](double t) { return green(kPot, {t, xp, lambda}); };
    cplx d2 = (-G(x + 2 * h) + 16.0 * G(x + h) - 30.0 * G(x) + 16.0 * G(x - h) - G(x - 2 * h)) / (12 * h * h);
    CHECK(std::abs(-d2 - lambda * G(x)) < 1e-6);
    // Unit jump of the derivative at x = x'.
    double s = 0.7;
    auto Gs = [&](double t) { return green(kPot, {t, s, lambda}); };
    double d = 1e-6;
    cplx right = (Gs(s + 2 * d) - Gs(s + d)) / d;
    cplx left = (Gs(s - d) - Gs(s - 2 * d)) / d;
    CHECK(std::abs(-(right - left) - 1.0) < 1e-5);
    // Residue at the singular point lambda = -z^2/4 = 1.
    // The limit is (z/2) psi0(x) psi0(x').
    const cplx limit = kPot.z() / 2.0 * psi_zero(kPot, 0.4) * psi_zero(kPot, -0.2);
    double prev = 1e9;
    for (double off : {1e-3, 1e-5}) {
        cplx l = 1.0 + cplx(off, off);
        cplx v = (l - 1.0) * green(kPot, {0.4, -0.2, l});
        double err = std::abs(v - limit);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-4);
    CHECK_THROWS_AS(green(kPot, {0.4, -0.2, 1.0}), PoleError);
    CHECK_THROWS_AS(green(kPot, {0.4, -0.2, 0.0}), DomainError);
}
