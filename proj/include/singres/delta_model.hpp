#pragma once

#include "singres/special_functions.hpp"

namespace singres {

// h = -d^2/dx^2 + z delta(x) with purely imaginary z.
class DeltaPotential {
public:
    explicit DeltaPotential(cplx z);
    cplx z() const { return z_; }
    // Location of the spectral singularity, k0 = -iz/2 (real).
    double k0() const { return z_.imag() / 2.0; }

private:
    cplx z_;
};

struct ValueDerivative {
    cplx value;
    cplx derivative;
};

struct GreenQuery {
    double x;
    double x_prime;
    cplx lambda;
};

struct ScatteringCoefficients {
    cplx transmission;
    cplx reflection;
};

// sqrt(lambda) on the branch Im >= 0.
cplx physical_sqrt(cplx lambda);

// Step function with theta(0) = 1.
inline double step(double x) { return x >= 0.0 ? 1.0 : 0.0; }

cplx psi_plus(const DeltaPotential& pot, double x, cplx k);
cplx psi_minus(const DeltaPotential& pot, double x, cplx k);
cplx psi_zero(const DeltaPotential& pot, double x);

// Analytic x-derivatives; at x = 0 the right-hand branch is used.
ValueDerivative psi_plus_dx(const DeltaPotential& pot, double x, cplx k);
ValueDerivative psi_minus_dx(const DeltaPotential& pot, double x, cplx k);
ValueDerivative psi_zero_dx(const DeltaPotential& pot, double x);
// Left-hand limits at x = 0.
ValueDerivative psi_plus_dx_left(const DeltaPotential& pot, double x, cplx k);
ValueDerivative psi_minus_dx_left(const DeltaPotential& pot, double x, cplx k);
ValueDerivative psi_zero_dx_left(const DeltaPotential& pot, double x);

cplx green(const DeltaPotential& pot, const GreenQuery& q);
cplx wronskian(const DeltaPotential& pot, cplx k, double x);
ScatteringCoefficients scattering_coeffs(const DeltaPotential& pot, cplx k);

// psi_plus(x;k) psi_minus(x';k) in decomposed form.
cplx kernel_product(const DeltaPotential& pot, double x, double x_prime, cplx k);

// |2k + iz| / |z|: distance to the spectral singularity in units of the coupling.
double singularity_distance(const DeltaPotential& pot, cplx k);

}  // namespace singres
