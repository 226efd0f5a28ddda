#pragma once

#include "singres/delta_model.hpp"

namespace singres {

// Closed-form pieces of the delta-model resolution kernels. Each is a function of
// (x, x') for fixed cutoff A and excision half-width eps around k0 = -iz/2.

// sin A(x-x') / (pi (x-x')), the free part of K_A.
cplx sinc_kernel(double x, double x_prime, double A);

// int over [-A, A] minus [k0-eps, k0+eps] of psi_plus(x;k) psi_minus(x';k) dk.
cplx split_kernel(const DeltaPotential& pot, double x, double x_prime, double A, double eps);

// (1/pi) e^{z(x-x')/2} sin eps(x-x') / (x-x')
cplx chord_sinc(const DeltaPotential& pot, double x, double x_prime, double eps);

// int_{k0-eps}^{k0+eps} sin(kx) sin(kx')/k dk
double window_sin_sin(double x, double x_prime, double k0, double eps);

// (iz/pi) theta(-x) theta(x') window_sin_sin
cplx chord_sin_sin(const DeltaPotential& pot, double x, double x_prime, double eps);

// psi0(x) psi0(x')
cplx psi0_psi0(const DeltaPotential& pot, double x, double x_prime);

// (2/pi) Si(eps (|x| + |x'|))
double si_weight(double x, double x_prime, double eps);

// int_{-k0-eps}^{-k0+eps} psi_plus(x;k) psi_minus(x';k) dk
cplx mirror_window_kernel(const DeltaPotential& pot, double x, double x_prime, double eps);

// The two terms that complete the scattering forms to the eps-split form.
cplx supplementary_terms(const DeltaPotential& pot, double x, double x_prime, double eps);

// Integrands over k > 0 of the scattering forms, before excision.
cplx paired_integrand_folded(const DeltaPotential& pot, double x, double x_prime, cplx k);  // f(k) + f(-k)
cplx paired_integrand_scattering(const DeltaPotential& pot, double x, double x_prime, cplx k);
cplx paired_integrand_symmetric(const DeltaPotential& pot, double x, double x_prime, cplx k);

}  // namespace singres
