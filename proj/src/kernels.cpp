#include "singres/kernels.hpp"

#include <cmath>

#include "singres/contour.hpp"
#include "singres/errors.hpp"
#include "singres/special_functions.hpp"

namespace singres {

cplx sinc_kernel(double x, double x_prime, double A) { return sin_ratio(x - x_prime, A) / kPi; }

cplx split_kernel(const DeltaPotential& pot, double x, double x_prime, double A, double eps) {
    const double k0 = pot.k0();
    ContourSpec{A, eps, k0}.validate();
    const double d = x - x_prime;
    const double r = std::abs(x) + std::abs(x_prime);
    const cplx iz = kI * pot.z();
    cplx plane = sinc_kernel(x, x_prime, A) - std::exp(kI * k0 * d) * sin_ratio(d, eps) / kPi;
    // The sin-sin part is odd in k, so only the excised window survives.
    cplx sines = 0.0;
    if (x < 0.0 && x_prime >= 0.0) sines = -iz / kPi * window_sin_sin(x, x_prime, k0, eps);
    cplx pole = exp_over_k_integral(-A - k0, -eps, r) + exp_over_k_integral(eps, A - k0, r);
    return plane + sines - iz / (4.0 * kPi) * std::exp(kI * k0 * r) * pole;
}

cplx chord_sinc(const DeltaPotential& pot, double x, double x_prime, double eps) {
    const double d = x - x_prime;
    return std::exp(pot.z() * d / 2.0) * sin_ratio(d, eps) / kPi;
}

double window_sin_sin(double x, double x_prime, double k0, double eps) {
    const double lo = k0 - eps, hi = k0 + eps;
    return 0.5 * (cos_over_k_integral(lo, hi, x - x_prime) - cos_over_k_integral(lo, hi, x + x_prime));
}

cplx chord_sin_sin(const DeltaPotential& pot, double x, double x_prime, double eps) {
    if (!(x < 0.0 && x_prime >= 0.0)) return 0.0;
    return kI * pot.z() / kPi * window_sin_sin(x, x_prime, pot.k0(), eps);
}

cplx psi0_psi0(const DeltaPotential& pot, double x, double x_prime) {
    return psi_zero(pot, x) * psi_zero(pot, x_prime);
}

double si_weight(double x, double x_prime, double eps) {
    return 2.0 / kPi * sin_integral(eps * (std::abs(x) + std::abs(x_prime)));
}

cplx mirror_window_kernel(const DeltaPotential& pot, double x, double x_prime, double eps) {
    const double k0 = pot.k0();
    const double d = x - x_prime;
    const double r = std::abs(x) + std::abs(x_prime);
    const cplx iz = kI * pot.z();
    cplx plane = std::exp(-kI * k0 * d) * sin_ratio(d, eps) / kPi;
    cplx sines = 0.0;
    if (x < 0.0 && x_prime >= 0.0) sines = -iz / kPi * window_sin_sin(x, x_prime, k0, eps);
    cplx pole = std::exp(kI * k0 * r) * exp_over_k_integral(-2.0 * k0 - eps, -2.0 * k0 + eps, r);
    return plane + sines - iz / (4.0 * kPi) * pole;
}

cplx supplementary_terms(const DeltaPotential& pot, double x, double x_prime, double eps) {
    const double k0 = pot.k0();
    if (!(eps > 0.0 && eps < std::abs(k0))) throw ParameterError("supplementary_terms: need 0 < eps < |z|/2");
    const double d = x - x_prime;
    const double r = std::abs(x) + std::abs(x_prime);
    const cplx iz = kI * pot.z();
    cplx first = 2.0 / kPi * std::cos(iz * d / 2.0) * sin_ratio(d, eps);
    // The window is centred on iz/2 = -k0.
    cplx second = std::exp(kI * k0 * r) * exp_over_k_integral(-2.0 * k0 - eps, -2.0 * k0 + eps, r);
    return first - iz / (4.0 * kPi) * second;
}

cplx paired_integrand_folded(const DeltaPotential& pot, double x, double x_prime, cplx k) {
    return psi_plus(pot, x, k) * psi_minus(pot, x_prime, k) + psi_plus(pot, x, -k) * psi_minus(pot, x_prime, -k);
}

cplx paired_integrand_scattering(const DeltaPotential& pot, double x, double x_prime, cplx k) {
    const cplx z = pot.z();
    const cplx w = 4.0 * k * k / (4.0 * k * k + z * z);
    return psi_plus(pot, x, k) * psi_plus(pot, x_prime, -k) + w * psi_minus(pot, x, k) * psi_minus(pot, x_prime, -k);
}

cplx paired_integrand_symmetric(const DeltaPotential& pot, double x, double x_prime, cplx k) {
    const cplx z = pot.z();
    const cplx iz = kI * z;
    const cplx q = 4.0 * k * k + z * z;
    const cplx pp = psi_plus(pot, x, k), pm = psi_minus(pot, x, k);
    const cplx qp = psi_plus(pot, x_prime, k), qm = psi_minus(pot, x_prime, k);
    return iz / (2.0 * k - iz) * pp * qp + 4.0 * k * k / q * (pp * qm + pm * qp) +
           4.0 * kI * k * k * z / (q * (2.0 * k + iz)) * pm * qm;
}

}  // namespace singres
