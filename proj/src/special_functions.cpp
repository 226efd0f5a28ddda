#include "singres/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "singres/errors.hpp"

namespace singres {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

bool is_nonpositive_integer(cplx w) {
    return w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real());
}

cplx log_gamma_right(cplx w) {
    cplx y = w;
    cplx tmp = w + 5.24218750000000000;
    tmp = (w + 0.5) * std::log(tmp) - tmp;
    cplx ser = 0.999999999999997092;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / w);
}

// log sin(pi w) without overflow for large |Im w|.
cplx log_sin_pi(cplx w) {
    const double y = w.imag();
    if (std::abs(y) < 20.0) return std::log(sin_pi(w));
    // sin(pi w) = (e^{i pi w} - e^{-i pi w}) / 2i; keep the dominant exponential.
    if (y > 0) {
        cplx lead = -kI * kPi * w;
        return lead - std::log(cplx(0, -2)) + std::log(1.0 - std::exp(2.0 * kI * kPi * w));
    }
    cplx lead = kI * kPi * w;
    return lead - std::log(cplx(0, 2)) + std::log(1.0 - std::exp(-2.0 * kI * kPi * w));
}

double sin_pi_real(double x) {
    double n = std::round(2.0 * x);
    double r = x - 0.5 * n;
    long q = static_cast<long>(std::fmod(n, 4.0));
    if (q < 0) q += 4;
    double s = std::sin(kPi * r);
    double c = std::cos(kPi * r);
    switch (q) {
        case 0: return r == 0.0 ? 0.0 : s;
        case 1: return c;
        case 2: return r == 0.0 ? 0.0 : -s;
        default: return -c;
    }
}

double cos_pi_real(double x) { return sin_pi_real(x + 0.5); }

// E1(ix) for x > 4 by modified Lentz on the continued fraction.
cplx exp_integral_e1_imag(double x) {
    cplx b(1.0, x);
    cplx c = 1.0 / 1e-300;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 2; i < 200; ++i) {
        double a = -double(i - 1) * double(i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        cplx del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    h *= cplx(std::cos(x), -std::sin(x));
    return h;
}

}  // namespace

cplx require_finite(cplx v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError(std::string(what) + ": non-finite result");
    return v;
}

double require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite result");
    return v;
}

cplx sin_pi(cplx w) {
    const double x = w.real();
    const double y = w.imag();
    return {sin_pi_real(x) * std::cosh(kPi * y), cos_pi_real(x) * std::sinh(kPi * y)};
}

cplx cos_pi(cplx w) {
    const double x = w.real();
    const double y = w.imag();
    return {cos_pi_real(x) * std::cosh(kPi * y), -sin_pi_real(x) * std::sinh(kPi * y)};
}

cplx log_gamma(cplx w) {
    if (is_nonpositive_integer(w)) throw PoleError("gamma: pole at non-positive integer");
    if (w.real() >= 0.5) return log_gamma_right(w);
    return std::log(kPi) - log_sin_pi(w) - log_gamma_right(1.0 - w);
}

cplx gamma(cplx w) {
    if (is_nonpositive_integer(w)) throw PoleError("gamma: pole at non-positive integer");
    if (w.real() >= 0.5) return require_finite(std::exp(log_gamma_right(w)), "gamma");
    // Reflection; keep sin(pi w) exact so integer-adjacent arguments stay accurate.
    if (std::abs(w.imag()) < 20.0)
        return require_finite(kPi / (sin_pi(w) * std::exp(log_gamma_right(1.0 - w))), "gamma");
    return require_finite(std::exp(log_gamma(w)), "gamma");
}

cplx rgamma(cplx w) {
    if (is_nonpositive_integer(w)) return 0.0;
    if (w.real() >= 0.5) return std::exp(-log_gamma_right(w));
    if (std::abs(w.imag()) < 20.0) return sin_pi(w) * std::exp(log_gamma_right(1.0 - w)) / kPi;
    return std::exp(-log_gamma(w));
}

cplx hyp2f1(const Hyp2F1Params& p) {
    if (!(p.arg >= 0.0 && p.arg < 1.0)) throw DomainError("hyp2f1: argument outside [0, 1)");
    if (is_nonpositive_integer(p.c)) throw ParameterError("hyp2f1: c is a non-positive integer");
    constexpr int kMaxTerms = 200000;
    cplx sum = 1.0;
    cplx term = 1.0;
    int small_run = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        term *= (p.a + double(n)) * (p.b + double(n)) / ((p.c + double(n)) * double(n + 1)) * p.arg;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++small_run >= 2) return require_finite(sum, "hyp2f1");
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series did not converge within the term budget");
}

cplx hyp2f1_derivative(const Hyp2F1Params& p) {
    return p.a * p.b / p.c * hyp2f1({p.a + 1.0, p.b + 1.0, p.c + 1.0, p.arg});
}

double sin_integral(double x) {
    if (!(x >= 0.0)) throw DomainError("sin_integral: negative argument");
    if (x == 0.0) return 0.0;
    if (x <= 4.0) {
        double x2 = x * x;
        double term = x;
        double sum = x;
        for (int n = 1; n < 60; ++n) {
            term *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
            double add = term / (2.0 * n + 1.0);
            sum += add;
            if (std::abs(add) < 1e-18) break;
        }
        return sum;
    }
    return kPi / 2 + exp_integral_e1_imag(x).imag();
}

double cos_integral(double x) {
    if (!(x > 0.0)) throw DomainError("cos_integral: argument must be positive");
    if (x <= 4.0) {
        double x2 = x * x;
        double term = 1.0;
        double sum = 0.0;
        for (int n = 1; n < 60; ++n) {
            term *= -x2 / ((2.0 * n - 1.0) * (2.0 * n));
            double add = term / (2.0 * n);
            sum += add;
            if (std::abs(add) < 1e-18) break;
        }
        return kEulerGamma + std::log(x) + sum;
    }
    return -exp_integral_e1_imag(x).real();
}

cplx legendre_p(cplx mu, cplx nu, double tau) {
    if (!(std::abs(tau) < 1.0)) throw DomainError("legendre_p: |tau| must be < 1");
    cplx c = 1.0 - mu;
    if (is_nonpositive_integer(c))
        throw ParameterError("legendre_p: 1 - mu is a non-positive integer");
    cplx pref = std::pow((1.0 + tau) / (1.0 - tau), mu / 2.0) * rgamma(c);
    return pref * hyp2f1({-nu, nu + 1.0, c, (1.0 - tau) / 2.0});
}

cplx sin_ratio(cplx k, double x) {
    cplx kx = k * x;
    if (std::abs(kx) < 1e-4) {
        cplx s = kx * kx;
        return x * (1.0 - s / 6.0 + s * s / 120.0);
    }
    return std::sin(kx) / k;
}

}  // namespace singres
