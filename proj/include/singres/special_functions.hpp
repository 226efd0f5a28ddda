#pragma once

#include <complex>

namespace singres {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Throws DomainError if v has a NaN or infinite component.
cplx require_finite(cplx v, const char* what);
double require_finite(double v, const char* what);

// sin(pi w) and cos(pi w) with exact zeros at integers.
cplx sin_pi(cplx w);
cplx cos_pi(cplx w);

// log Gamma(w); imaginary part is only defined modulo 2 pi.
cplx log_gamma(cplx w);
cplx gamma(cplx w);
// 1/Gamma(w), zero at the poles of Gamma.
cplx rgamma(cplx w);

struct Hyp2F1Params {
    cplx a;
    cplx b;
    cplx c;
    double arg = 0.0;
};

// Gauss series, arg in [0, 1).
cplx hyp2f1(const Hyp2F1Params& p);
// d/d(arg) of the same function.
cplx hyp2f1_derivative(const Hyp2F1Params& p);

double sin_integral(double x);
double cos_integral(double x);

// Ferrers function P^mu_nu(tau), tau in (-1, 1).
cplx legendre_p(cplx mu, cplx nu, double tau);

// sin(k x)/k with the k -> 0 limit x.
cplx sin_ratio(cplx k, double x);

}  // namespace singres
