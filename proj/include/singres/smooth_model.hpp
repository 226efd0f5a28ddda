#pragma once

#include "singres/delta_model.hpp"
#include "singres/special_functions.hpp"

namespace singres {

// h_alpha = -d^2/dx^2 - (z/2)(z/2 - alpha)/cosh^2(alpha x).
class SmoothPotential {
public:
    // z purely imaginary, Re alpha != 0.
    SmoothPotential(cplx z, cplx alpha);
    // Any nonzero z; only the Gamma-function scattering data accept this.
    static SmoothPotential general(cplx z, cplx alpha);

    cplx z() const { return z_; }
    cplx alpha() const { return alpha_; }
    double k0() const { return (-kI * z_ / 2.0).real(); }
    // Hypergeometric parameters a = 1 - z/2alpha, b = z/2alpha.
    cplx a() const { return 1.0 - b(); }
    cplx b() const { return z_ / (2.0 * alpha_); }

private:
    SmoothPotential(cplx z, cplx alpha, bool) : z_(z), alpha_(alpha) {}
    cplx z_;
    cplx alpha_;
};

// Which of the two equivalent hypergeometric forms to use.
enum class Representation { automatic, right_half, left_half };

cplx potential(const SmoothPotential& pot, double x);

ValueDerivative psi_plus_smooth_dx(const SmoothPotential& pot, double x, cplx k,
                                   Representation rep = Representation::automatic);
ValueDerivative psi_minus_smooth_dx(const SmoothPotential& pot, double x, cplx k,
                                    Representation rep = Representation::automatic);
cplx psi_plus_smooth(const SmoothPotential& pot, double x, cplx k,
                     Representation rep = Representation::automatic);
cplx psi_minus_smooth(const SmoothPotential& pot, double x, cplx k,
                      Representation rep = Representation::automatic);

// Eigenfunction values at one k, with the k-dependent Gamma coefficients computed once.
// Same automatic representation choice as psi_plus_smooth / psi_minus_smooth.
class SmoothModes {
public:
    SmoothModes(const SmoothPotential& pot, cplx k);
    cplx plus(double x) const;
    cplx minus(double x) const;

private:
    SmoothPotential pot_;
    cplx k_;
    double alpha_;
    cplx plus_right_;   // transmission factor times 2k/(2k+iz)
    cplx reflection_;
    cplx minus_out_;
    cplx minus_in_;
    bool small_k_;
};

// [2 cosh(alpha x)]^{z/2alpha}
cplx psi_zero_smooth(const SmoothPotential& pot, double x);
ValueDerivative psi_zero_smooth_dx(const SmoothPotential& pot, double x);

cplx green_smooth(const SmoothPotential& pot, const GreenQuery& q);
cplx wronskian_smooth(const SmoothPotential& pot, cplx k, double x);

// Gamma(1+b-ik/alpha) Gamma(1-b-ik/alpha) / Gamma(1-ik/alpha)^2
cplx transmission_gamma_factor(const SmoothPotential& pot, cplx k);
// Coefficient of e^{-ikx} in psi_plus as x -> -infinity.
cplx reflection_amplitude_smooth(const SmoothPotential& pot, cplx k);
// psi_minus(-x;k) / psi_plus(x;k) for the symmetric potential.
cplx mirror_factor(const SmoothPotential& pot, cplx k);
// Gamma(1 - z/alpha) / Gamma(1 - z/2alpha)^2, weight of the singular term.
cplx singularity_weight(const SmoothPotential& pot);

enum class SuperpotentialFamily { tanh, sign, sqrt_regularized, arctan_regularized };

struct SuperpotentialSpec {
    SuperpotentialFamily family;
    cplx z;
    // alpha for tanh, epsilon for the regularized families, unused for sign.
    double parameter = 1.0;
};

cplx superpotential(const SuperpotentialSpec& spec, double x);
ValueDerivative superpotential_dx(const SuperpotentialSpec& spec, double x);
// chi^2 + sign * chi'
cplx partner_potential(const SuperpotentialSpec& spec, double x, int sign);

}  // namespace singres
