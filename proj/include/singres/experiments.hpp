#pragma once

#include <vector>

#include "singres/resolution.hpp"

namespace singres {

// exp(-(k - center)^2 / (2 width^2)), a test function in the spectral variable.
struct SpectralGaussian {
    double center = 1.5;
    double width = 1.0;
};

cplx evaluate(const SpectralGaussian& phi, double k);

struct BiorthogonalityResult {
    cplx value;       // sinc term minus the boundary term
    cplx sinc_term;   // (1/pi) int sin A(k-k')/(k-k') psi(k) dk
    cplx boundary;    // (1/pi) (sin k'A / k') int e^{ikA} phi(k) dk
    cplx expected;    // (1 + 2k'/iz) phi(k')
};

// Reduced smeared kernel of the biorthogonality relation at cutoff A.
BiorthogonalityResult biorthogonality_check(const DeltaPotential& pot, const SpectralGaussian& phi, double k_prime,
                                            double A);

// Fourier-type transform int psi_plus(x;k) psi0(x;alpha) dx in closed form.
cplx smoothed_state_transform(const DeltaPotential& pot, double alpha, cplx k);

struct SmoothedStateSplit {
    cplx continuum;
    cplx singular;
    cplx expected_continuum;  // psi0(x';alpha) - psi0(x')/(2 - alpha/z)
    cplx expected_singular;   // psi0(x')/(2 - alpha/z)
    // alpha_first only: the alpha -> 0 values at fixed eps, one row per alpha.
    std::vector<double> alpha_values;
    std::vector<cplx> alpha_totals;
};

// Continuum and singular parts of the p.v. resolution applied to exp((z - alpha)|x|/2).
// With order alpha_first, alpha runs through sched.alpha_values at eps = eps_values.front()
// and both parts are extrapolated to alpha = 0 (the `alpha` argument is ignored).
SmoothedStateSplit example1_split(const DeltaPotential& pot, double alpha, double x_prime,
                                  const LimitSchedule& sched);

struct HalfMassParts {
    cplx sinc;      // chord-sinc term acting on psi0
    cplx sin_sin;   // theta(-x)theta(x') sin-sin term acting on psi0
    cplx total() const { return sinc + sin_sin; }
};

// Window terms of the eps-split form acting on psi0 at one eps, Abel-extrapolated in delta.
HalfMassParts half_mass_complement(const DeltaPotential& pot, double x_prime, double eps,
                                   const std::vector<double>& delta_values);

struct HalfMassReport {
    cplx principal_value;   // p.v. form on psi0, expected psi0(x')/2
    HalfMassParts complement;  // extrapolated to eps = 0, expected psi0(x')/2 in total
    cplx sinc_expected;     // e^{-zx'/2}/2
    cplx sin_sin_expected;  // theta(x')(e^{zx'/2} - e^{-zx'/2})/2
    cplx half;              // psi0(x')/2
    cplx sum() const { return principal_value + complement.total(); }
};

HalfMassReport half_mass_experiment(const DeltaPotential& pot, double x_prime, const LimitSchedule& sched);

// Discrete spectral-singularity term of the p.v. resolution.
cplx residue_extraction(const ModelSpec& model, double x, double x_prime);

struct ResidueCheck {
    cplx extracted;  // (contour - pv split), Richardson-extrapolated in eps
    cplx expected;
    std::vector<cplx> per_eps;
};

// (integrate_contour - pv_split_integral) of psi_plus(x;k) psi_minus(x';k) at cutoff A for
// eps, eps/2, eps/4.
ResidueCheck residue_crosscheck(const ModelSpec& model, double x, double x_prime, double A, double eps);

// Largest |kernel_K_A - contour quadrature| over `draws` random (x, x') in [-3, 3]^2.
double kernel_xcheck(const DeltaPotential& pot, double A, int draws, unsigned seed);

// Individual eps-window pieces whose vanishing (or not) the decay lemmas describe.
enum class WindowTerm {
    chord_sinc,       // Lemma 2
    chord_sin_sin,    // Lemma 4, Corollary 1
    si_correction,    // Lemma 5: (z/4) psi0 psi0 (2/pi) Si(eps r)
    mirror_pole,      // Lemma 6: second supplementary term
};

std::string window_term_name(WindowTerm term);

// Action of one window term on phi at x', Abel-extrapolated in delta.
cplx window_term_action(const DeltaPotential& pot, WindowTerm term, const TestFunctionSpec& phi, double x_prime,
                        double eps, const std::vector<double>& delta_values);

struct DecayRow {
    double eps;
    cplx value;
};

std::vector<DecayRow> decay_experiment(const DeltaPotential& pot, WindowTerm term, const TestFunctionSpec& phi,
                                       double x_prime, const std::vector<double>& eps_values,
                                       const std::vector<double>& delta_values);

}  // namespace singres
