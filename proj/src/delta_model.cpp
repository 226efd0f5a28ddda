#include "singres/delta_model.hpp"

#include <cmath>

#include "singres/errors.hpp"

namespace singres {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

void check_pole(const DeltaPotential& pot, cplx k) {
    if (std::abs(2.0 * k + kI * pot.z()) < 1e-12 * std::abs(pot.z()))
        throw PoleError("delta model: k at the spectral singularity -iz/2");
}

}  // namespace

DeltaPotential::DeltaPotential(cplx z) : z_(z) {
    if (z.real() != 0.0) throw ParameterError("delta model: z must be purely imaginary");
    if (z.imag() == 0.0) throw ParameterError("delta model: z must be nonzero");
}

cplx physical_sqrt(cplx lambda) {
    cplx s = std::sqrt(lambda);
    return s.imag() < 0.0 ? -s : s;
}

double singularity_distance(const DeltaPotential& pot, cplx k) {
    return std::abs(2.0 * k + kI * pot.z()) / std::abs(pot.z());
}

ValueDerivative psi_plus_dx(const DeltaPotential& pot, double x, cplx k) {
    check_pole(pot, k);
    const cplx iz = kI * pot.z();
    if (x >= 0.0) {
        cplx v = 2.0 * k / (2.0 * k + iz) * std::exp(kI * k * x) * kInvSqrt2Pi;
        return {v, kI * k * v};
    }
    cplx refl = iz / (2.0 * k + iz);
    cplx ep = std::exp(kI * k * x);
    cplx em = std::exp(-kI * k * x);
    return {(ep - refl * em) * kInvSqrt2Pi, kI * k * (ep + refl * em) * kInvSqrt2Pi};
}

ValueDerivative psi_plus_dx_left(const DeltaPotential& pot, double x, cplx k) {
    if (x != 0.0) return psi_plus_dx(pot, x, k);
    check_pole(pot, k);
    const cplx iz = kI * pot.z();
    cplx refl = iz / (2.0 * k + iz);
    return {(1.0 - refl) * kInvSqrt2Pi, kI * k * (1.0 + refl) * kInvSqrt2Pi};
}

cplx psi_plus(const DeltaPotential& pot, double x, cplx k) { return psi_plus_dx(pot, x, k).value; }

ValueDerivative psi_minus_dx(const DeltaPotential& pot, double x, cplx k) {
    cplx em = std::exp(-kI * k * x);
    if (x < 0.0) return {em * kInvSqrt2Pi, -kI * k * em * kInvSqrt2Pi};
    cplx v = em + pot.z() * sin_ratio(k, x);
    cplx d = -kI * k * em + pot.z() * std::cos(k * x);
    return {v * kInvSqrt2Pi, d * kInvSqrt2Pi};
}

ValueDerivative psi_minus_dx_left(const DeltaPotential& pot, double x, cplx k) {
    if (x != 0.0) return psi_minus_dx(pot, x, k);
    return {kInvSqrt2Pi, -kI * k * kInvSqrt2Pi};
}

cplx psi_minus(const DeltaPotential& pot, double x, cplx k) { return psi_minus_dx(pot, x, k).value; }

ValueDerivative psi_zero_dx(const DeltaPotential& pot, double x) {
    cplx v = std::exp(pot.z() * std::abs(x) / 2.0);
    double sgn = x >= 0.0 ? 1.0 : -1.0;
    return {v, sgn * pot.z() / 2.0 * v};
}

ValueDerivative psi_zero_dx_left(const DeltaPotential& pot, double x) {
    if (x != 0.0) return psi_zero_dx(pot, x);
    return {1.0, -pot.z() / 2.0};
}

cplx psi_zero(const DeltaPotential& pot, double x) { return std::exp(pot.z() * std::abs(x) / 2.0); }

cplx green(const DeltaPotential& pot, const GreenQuery& q) {
    if (q.lambda == 0.0) throw DomainError("green: lambda = 0");
    cplx k = physical_sqrt(q.lambda);
    double hi = std::max(q.x, q.x_prime);
    double lo = std::min(q.x, q.x_prime);
    return kPi * kI / k * psi_plus(pot, hi, k) * psi_minus(pot, lo, k);
}

cplx wronskian(const DeltaPotential& pot, cplx k, double x) {
    auto p = psi_plus_dx(pot, x, k);
    auto m = psi_minus_dx(pot, x, k);
    return p.derivative * m.value - p.value * m.derivative;
}

ScatteringCoefficients scattering_coeffs(const DeltaPotential& pot, cplx k) {
    check_pole(pot, k);
    const cplx iz = kI * pot.z();
    return {2.0 * k / (2.0 * k + iz), -iz / (2.0 * k + iz)};
}

cplx kernel_product(const DeltaPotential& pot, double x, double x_prime, cplx k) {
    check_pole(pot, k);
    const cplx iz = kI * pot.z();
    cplx v = std::exp(kI * k * (x - x_prime));
    if (x < 0.0 && x_prime >= 0.0) {
        // (2iz/k) sin kx sin kx' with the k -> 0 limit kept finite.
        v += 2.0 * iz * std::sin(k * x) * sin_ratio(k, x_prime);
    }
    v -= iz / (2.0 * k + iz) * std::exp(kI * k * (std::abs(x) + std::abs(x_prime)));
    return v / (2.0 * kPi);
}

}  // namespace singres
