#include "singres/smooth_model.hpp"

#include <cmath>

#include "singres/errors.hpp"

namespace singres {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

double positive_alpha(const SmoothPotential& pot) {
    if (pot.alpha().imag() != 0.0 || !(pot.alpha().real() > 0.0))
        throw ParameterError("smooth model: needs real alpha > 0");
    return pot.alpha().real();
}

double real_alpha(const SmoothPotential& pot) {
    if (pot.z().real() != 0.0) throw ParameterError("smooth model: z must be purely imaginary");
    return positive_alpha(pot);
}

void check_pole(const SmoothPotential& pot, cplx k) {
    if (std::abs(2.0 * k + kI * pot.z()) < 1e-12 * std::abs(pot.z()))
        throw PoleError("smooth model: k at the spectral singularity -iz/2");
}

bool near_pole(cplx w) {
    if (std::abs(w.imag()) > 1e-10 || w.real() > 0.5) return false;
    return std::abs(w.real() - std::round(w.real())) < 1e-10;
}

// xi = 1/(e^{2 alpha x} + 1) without overflow.
double logistic_down(double alpha, double x) {
    double t = 2.0 * alpha * x;
    if (t >= 0.0) {
        double e = std::exp(-t);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(t));
}

// 1/sinh(w) stable for large |Re w|.
cplx inv_sinh(cplx w) {
    if (std::abs(w.real()) < 300.0) return 1.0 / std::sinh(w);
    if (w.real() > 0) return 2.0 * std::exp(-w) / (1.0 - std::exp(-2.0 * w));
    return -2.0 * std::exp(w) / (1.0 - std::exp(2.0 * w));
}

struct Hyp {
    cplx f;
    cplx df;
};

Hyp hyp_with_derivative(cplx a, cplx b, cplx c, double arg) {
    Hyp2F1Params p{a, b, c, arg};
    return {hyp2f1(p), hyp2f1_derivative(p)};
}

// e^{s ikx} F(a,b,c;xi(x)) and its x-derivative; dxi is d xi/dx.
ValueDerivative wave_times_hyp(cplx ik, double sgn, double x, const Hyp& h, double dxi) {
    cplx e = std::exp(sgn * ik * x);
    return {e * h.f, e * (sgn * ik * h.f + h.df * dxi)};
}

ValueDerivative scale(ValueDerivative v, cplx s) { return {v.value * s, v.derivative * s}; }
ValueDerivative add(ValueDerivative u, ValueDerivative v) {
    return {u.value + v.value, u.derivative + v.derivative};
}

}  // namespace

SmoothPotential::SmoothPotential(cplx z, cplx alpha) : z_(z), alpha_(alpha) {
    if (z.real() != 0.0) throw ParameterError("smooth model: z must be purely imaginary");
    if (z.imag() == 0.0) throw ParameterError("smooth model: z must be nonzero");
    if (alpha.real() == 0.0) throw ParameterError("smooth model: Re alpha must be nonzero");
}

SmoothPotential SmoothPotential::general(cplx z, cplx alpha) {
    if (z == 0.0) throw ParameterError("smooth model: z must be nonzero");
    if (alpha.real() == 0.0) throw ParameterError("smooth model: Re alpha must be nonzero");
    return SmoothPotential(z, alpha, true);
}

cplx potential(const SmoothPotential& pot, double x) {
    double alpha = positive_alpha(pot);
    double e = std::exp(-2.0 * alpha * std::abs(x));
    double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    return -(pot.z() / 2.0) * (pot.z() / 2.0 - alpha) * sech2;
}

cplx transmission_gamma_factor(const SmoothPotential& pot, cplx k) {
    cplx ika = kI * k / pot.alpha();
    cplx b = pot.b();
    return std::exp(log_gamma(1.0 + b - ika) + log_gamma(1.0 - b - ika) - 2.0 * log_gamma(1.0 - ika));
}

cplx reflection_amplitude_smooth(const SmoothPotential& pot, cplx k) {
    if (!(pot.alpha().real() > 0.0)) throw ParameterError("reflection amplitude: needs Re alpha > 0");
    check_pole(pot, k);
    const cplx alpha = pot.alpha();
    const cplx b = pot.b();
    const cplx ika = kI * k / alpha;
    const cplx iz = kI * pot.z();
    const cplx sinh_term = kI * sin_pi(b);  // sinh(i pi b)
    const cplx w_minus = 1.0 - b - ika;
    const cplx w_plus = 1.0 + b - ika;
    cplx r;
    if (near_pole(w_minus)) {
        // Gamma(w_minus) sin(pi b) = pi sin(pi b) / (Gamma(1 - w_minus) sin(pi (1 - w_minus)))
        cplx w = 1.0 - w_minus;
        cplx g = std::exp(log_gamma(1.0 + ika) + log_gamma(w_plus) - log_gamma(1.0 - ika) - log_gamma(w));
        r = -g * 2.0 * alpha * kI * sin_pi(b) / sin_pi(w) / (2.0 * k + iz);
    } else if (near_pole(w_plus)) {
        cplx w = 1.0 - w_plus;
        cplx g = std::exp(log_gamma(1.0 + ika) + log_gamma(w_minus) - log_gamma(1.0 - ika) - log_gamma(w));
        r = -g * 2.0 * alpha * kI * sin_pi(b) / sin_pi(w) / (2.0 * k + iz);
    } else {
        cplx g = std::exp(log_gamma(1.0 + ika) + log_gamma(w_plus) + log_gamma(w_minus) -
                          log_gamma(1.0 - ika));
        r = -g * (2.0 * alpha / kPi) * sinh_term / (2.0 * k + iz);
    }
    return require_finite(r, "reflection_amplitude_smooth");
}

cplx mirror_factor(const SmoothPotential& pot, cplx k) {
    return (1.0 + kI * pot.z() / (2.0 * k)) / transmission_gamma_factor(pot, k);
}

cplx singularity_weight(const SmoothPotential& pot) {
    cplx b = pot.b();
    return std::exp(log_gamma(1.0 - 2.0 * b) - 2.0 * log_gamma(1.0 - b));
}

ValueDerivative psi_plus_smooth_dx(const SmoothPotential& pot, double x, cplx k, Representation rep) {
    const double alpha = real_alpha(pot);
    check_pole(pot, k);
    const cplx a = pot.a(), b = pot.b();
    const cplx ik = kI * k;
    const cplx ika = ik / alpha;
    const cplx iz = kI * pot.z();
    if (rep == Representation::automatic)
        rep = x >= 0.0 ? Representation::right_half : Representation::left_half;
    ValueDerivative out;
    if (rep == Representation::right_half) {
        double xi = logistic_down(alpha, x);
        double dxi = -2.0 * alpha * xi * (1.0 - xi);
        cplx pref = transmission_gamma_factor(pot, k) * (2.0 * k / (2.0 * k + iz));
        out = scale(wave_times_hyp(ik, 1.0, x, hyp_with_derivative(a, b, 1.0 - ika, xi), dxi), pref);
    } else {
        double xi = logistic_down(alpha, -x);
        double dxi = 2.0 * alpha * xi * (1.0 - xi);
        cplx refl = reflection_amplitude_smooth(pot, k);
        out = add(wave_times_hyp(ik, 1.0, x, hyp_with_derivative(a, b, 1.0 + ika, xi), dxi),
                  scale(wave_times_hyp(ik, -1.0, x, hyp_with_derivative(a, b, 1.0 - ika, xi), dxi), refl));
    }
    return scale(out, kInvSqrt2Pi);
}

ValueDerivative psi_minus_smooth_dx(const SmoothPotential& pot, double x, cplx k, Representation rep) {
    const double alpha = real_alpha(pot);
    const cplx a = pot.a(), b = pot.b();
    const cplx ik = kI * k;
    const cplx ika = ik / alpha;
    if (rep == Representation::automatic) {
        // The right-half form divides by k; fall back to the left form near k = 0.
        bool small_k = std::abs(k) < 1e-6 * alpha;
        rep = (x >= 0.0 && !small_k) ? Representation::right_half : Representation::left_half;
    }
    ValueDerivative out;
    if (rep == Representation::left_half) {
        double xi = logistic_down(alpha, -x);
        double dxi = 2.0 * alpha * xi * (1.0 - xi);
        out = wave_times_hyp(ik, -1.0, x, hyp_with_derivative(a, b, 1.0 - ika, xi), dxi);
    } else {
        if (k == 0.0) throw DomainError("psi_minus_smooth: k = 0 in the right-half form");
        double xi = logistic_down(alpha, x);
        double dxi = -2.0 * alpha * xi * (1.0 - xi);
        cplx c_out = -kI * sin_pi(b) * inv_sinh(kPi * k / alpha);
        cplx c_in = (1.0 + kI * pot.z() / (2.0 * k)) / transmission_gamma_factor(pot, k);
        out = add(scale(wave_times_hyp(ik, 1.0, x, hyp_with_derivative(a, b, 1.0 - ika, xi), dxi), c_out),
                  scale(wave_times_hyp(ik, -1.0, x, hyp_with_derivative(a, b, 1.0 + ika, xi), dxi), c_in));
    }
    return scale(out, kInvSqrt2Pi);
}

SmoothModes::SmoothModes(const SmoothPotential& pot, cplx k) : pot_(pot), k_(k), alpha_(real_alpha(pot)) {
    check_pole(pot, k);
    const cplx iz = kI * pot.z();
    small_k_ = std::abs(k) < 1e-6 * alpha_;
    plus_right_ = transmission_gamma_factor(pot, k) * (2.0 * k / (2.0 * k + iz));
    reflection_ = reflection_amplitude_smooth(pot, k);
    if (!small_k_) {
        minus_out_ = -kI * sin_pi(pot.b()) * inv_sinh(kPi * k / alpha_);
        minus_in_ = (1.0 + iz / (2.0 * k)) / transmission_gamma_factor(pot, k);
    }
}

cplx SmoothModes::plus(double x) const {
    const cplx a = pot_.a(), b = pot_.b();
    const cplx ik = kI * k_;
    const cplx ika = ik / alpha_;
    cplx v;
    if (x >= 0.0) {
        v = plus_right_ * std::exp(ik * x) * hyp2f1({a, b, 1.0 - ika, logistic_down(alpha_, x)});
    } else {
        const double xi = logistic_down(alpha_, -x);
        v = std::exp(ik * x) * hyp2f1({a, b, 1.0 + ika, xi}) +
            reflection_ * std::exp(-ik * x) * hyp2f1({a, b, 1.0 - ika, xi});
    }
    return require_finite(v * kInvSqrt2Pi, "SmoothModes::plus");
}

cplx SmoothModes::minus(double x) const {
    const cplx a = pot_.a(), b = pot_.b();
    const cplx ik = kI * k_;
    const cplx ika = ik / alpha_;
    cplx v;
    if (x < 0.0 || small_k_) {
        v = std::exp(-ik * x) * hyp2f1({a, b, 1.0 - ika, logistic_down(alpha_, -x)});
    } else {
        const double xi = logistic_down(alpha_, x);
        v = minus_out_ * std::exp(ik * x) * hyp2f1({a, b, 1.0 - ika, xi}) +
            minus_in_ * std::exp(-ik * x) * hyp2f1({a, b, 1.0 + ika, xi});
    }
    return require_finite(v * kInvSqrt2Pi, "SmoothModes::minus");
}

cplx psi_plus_smooth(const SmoothPotential& pot, double x, cplx k, Representation rep) {
    return require_finite(psi_plus_smooth_dx(pot, x, k, rep).value, "psi_plus_smooth");
}

cplx psi_minus_smooth(const SmoothPotential& pot, double x, cplx k, Representation rep) {
    return require_finite(psi_minus_smooth_dx(pot, x, k, rep).value, "psi_minus_smooth");
}

ValueDerivative psi_zero_smooth_dx(const SmoothPotential& pot, double x) {
    const double alpha = real_alpha(pot);
    double ax = alpha * std::abs(x);
    double log_2cosh = ax + std::log1p(std::exp(-2.0 * ax));
    cplx v = std::exp(pot.z() / (2.0 * alpha) * log_2cosh);
    return {v, pot.z() / 2.0 * std::tanh(alpha * x) * v};
}

cplx psi_zero_smooth(const SmoothPotential& pot, double x) { return psi_zero_smooth_dx(pot, x).value; }

cplx green_smooth(const SmoothPotential& pot, const GreenQuery& q) {
    if (q.lambda == 0.0) throw DomainError("green_smooth: lambda = 0");
    cplx k = physical_sqrt(q.lambda);
    double hi = std::max(q.x, q.x_prime);
    double lo = std::min(q.x, q.x_prime);
    return kPi * kI / k * psi_plus_smooth(pot, hi, k) * psi_minus_smooth(pot, lo, k);
}

cplx wronskian_smooth(const SmoothPotential& pot, cplx k, double x) {
    auto p = psi_plus_smooth_dx(pot, x, k);
    auto m = psi_minus_smooth_dx(pot, x, k);
    return p.derivative * m.value - p.value * m.derivative;
}

ValueDerivative superpotential_dx(const SuperpotentialSpec& spec, double x) {
    const cplx z = spec.z;
    const double p = spec.parameter;
    switch (spec.family) {
        case SuperpotentialFamily::tanh: {
            double t = std::tanh(p * x);
            return {z / 2.0 * t, z / 2.0 * p * (1.0 - t * t)};
        }
        case SuperpotentialFamily::sign:
            return {x > 0.0 ? z / 2.0 : (x < 0.0 ? -z / 2.0 : cplx(0.0)), 0.0};
        case SuperpotentialFamily::sqrt_regularized: {
            double s = std::sqrt(x * x + p * p);
            return {z * x / (2.0 * s), z / 2.0 * p * p / (s * s * s)};
        }
        case SuperpotentialFamily::arctan_regularized:
            return {z / kPi * std::atan(x / p), z / kPi * p / (x * x + p * p)};
    }
    throw ParameterError("superpotential: unknown family");
}

cplx superpotential(const SuperpotentialSpec& spec, double x) { return superpotential_dx(spec, x).value; }

cplx partner_potential(const SuperpotentialSpec& spec, double x, int sign) {
    auto c = superpotential_dx(spec, x);
    return c.value * c.value + double(sign) * c.derivative;
}

}  // namespace singres
