#pragma once

#include "singres/delta_model.hpp"
#include "singres/quadrature.hpp"

namespace singres {

// Path L(A): [-A, k0 - eps], upper semicircle around k0, [k0 + eps, A].
struct ContourSpec {
    double A;
    double eps;
    double k0;
    // Throws ParameterError unless 0 < eps < min(|k0|, A - |k0|)/2 (eps < (A - |k0|)/2 if k0 = 0).
    void validate() const;
};

// How the path avoids the pole at k0.
enum class Prescription {
    upper_semicircle,
    // Real axis lifted to Im k = eps: the pole is pushed below the path.
    shifted_line,
};

struct ContourPieces {
    QuadratureResult left;
    QuadratureResult arc;
    QuadratureResult right;
    QuadratureResult total() const { return combine(combine(left, arc), right); }
    QuadratureResult split() const { return combine(left, right); }
};

ContourPieces integrate_contour_pieces(const ComplexIntegrand& f, const ContourSpec& spec,
                                       const AdaptiveOptions& opt = {});
QuadratureResult integrate_contour(const ComplexIntegrand& f, const ContourSpec& spec,
                                   const AdaptiveOptions& opt = {},
                                   Prescription how = Prescription::upper_semicircle);
// Semicircle k = k0 + eps e^{i(pi - theta)}, theta from 0 to pi.
QuadratureResult integrate_semicircle(const ComplexIntegrand& f, double k0, double eps,
                                      const AdaptiveOptions& opt = {});

// (int_{-A}^{k0-eps} + int_{k0+eps}^{A}) f(k) dk
QuadratureResult pv_split_integral(const ComplexIntegrand& f, double k0, double eps, double A,
                                   const AdaptiveOptions& opt = {});

struct PrincipalValue {
    cplx value;
    cplx split[3];  // at eps, eps/2, eps/4
    double error_estimate;
};

// Richardson over eps, eps/2, eps/4; throws PvFailure if the split values blow up.
PrincipalValue principal_value(const ComplexIntegrand& f, double k0, double eps, double A,
                               const AdaptiveOptions& opt = {});

// int over L(A) of e^{ikr}/(k - k0) dk, r > 0, A > |k0|.
cplx cauchy_kernel_integral(double r, double k0, double A);
// Same integral at r = 0.
cplx cauchy_kernel_integral_at_origin(double k0, double A);

// int_{u1}^{u2} e^{iur}/u du for r >= 0 and an interval not containing 0.
cplx exp_over_k_integral(double u1, double u2, double r);
// int_{k1}^{k2} cos(a k)/k dk for an interval not containing 0.
double cos_over_k_integral(double k1, double k2, double a);

// Closed form of int over L(A) of psi_plus(x;k) psi_minus(x';k) dk.
cplx kernel_K_A(const DeltaPotential& pot, double x, double x_prime, double A);

}  // namespace singres
