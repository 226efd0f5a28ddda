#include "singres/contour.hpp"

#include <cmath>
#include <string>

#include "singres/errors.hpp"

namespace singres {

namespace {

AdaptiveOptions with_panels(AdaptiveOptions opt, double length) {
    if (opt.initial_panels <= 1) opt.initial_panels = std::max(1, static_cast<int>(std::ceil(length)));
    return opt;
}

QuadratureResult integrate_line(const ComplexIntegrand& f, cplx from, cplx to, const AdaptiveOptions& opt) {
    const cplx d = to - from;
    auto g = [&](double t) { return f(from + t * d) * d; };
    return integrate_adaptive(g, 0.0, 1.0, with_panels(opt, std::abs(d)));
}

}  // namespace

void ContourSpec::validate() const {
    const double ak = std::abs(k0);
    if (!(A > ak)) throw ParameterError("contour: A must exceed |k0|");
    if (!(eps > 0.0)) throw ParameterError("contour: eps must be positive");
    double limit = (k0 != 0.0) ? std::min(ak, A - ak) / 2.0 : (A - ak) / 2.0;
    if (!(eps < limit))
        throw ParameterError("contour: eps must be below min(|k0|, A - |k0|)/2 = " + std::to_string(limit));
}

QuadratureResult integrate_semicircle(const ComplexIntegrand& f, double k0, double eps,
                                      const AdaptiveOptions& opt) {
    auto g = [&](double theta) {
        cplx e = std::exp(kI * (kPi - theta));
        return f(k0 + eps * e) * (-kI * eps * e);
    };
    AdaptiveOptions o = opt;
    if (o.initial_panels <= 1) o.initial_panels = 4;
    return integrate_adaptive(g, 0.0, kPi, o);
}

ContourPieces integrate_contour_pieces(const ComplexIntegrand& f, const ContourSpec& spec,
                                       const AdaptiveOptions& opt) {
    spec.validate();
    ContourPieces p;
    p.left = integrate_line(f, -spec.A, spec.k0 - spec.eps, opt);
    p.arc = integrate_semicircle(f, spec.k0, spec.eps, opt);
    p.right = integrate_line(f, spec.k0 + spec.eps, spec.A, opt);
    return p;
}

QuadratureResult integrate_contour(const ComplexIntegrand& f, const ContourSpec& spec,
                                   const AdaptiveOptions& opt, Prescription how) {
    if (how == Prescription::upper_semicircle) return integrate_contour_pieces(f, spec, opt).total();
    spec.validate();
    const cplx lift = kI * spec.eps;
    QuadratureResult r = integrate_line(f, -spec.A, -spec.A + lift, opt);
    r = combine(r, integrate_line(f, -spec.A + lift, spec.A + lift, opt));
    return combine(r, integrate_line(f, spec.A + lift, spec.A, opt));
}

QuadratureResult pv_split_integral(const ComplexIntegrand& f, double k0, double eps, double A,
                                   const AdaptiveOptions& opt) {
    ContourSpec{A, eps, k0}.validate();
    return combine(integrate_line(f, -A, k0 - eps, opt), integrate_line(f, k0 + eps, A, opt));
}

PrincipalValue principal_value(const ComplexIntegrand& f, double k0, double eps, double A,
                               const AdaptiveOptions& opt) {
    PrincipalValue pv{};
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        auto r = pv_split_integral(f, k0, eps / double(1 << i), A, opt);
        pv.split[i] = r.value;
        err += r.abs_error_estimate;
    }
    const double d1 = std::abs(pv.split[1] - pv.split[0]);
    const double d2 = std::abs(pv.split[2] - pv.split[1]);
    const double floor = 1e3 * std::max(opt.abs_tol, opt.rel_tol * std::abs(pv.split[2]));
    if (d2 > 1.2 * d1 && d2 > floor)
        throw PvFailure("principal value: excision values do not settle as eps shrinks");
    pv.value = richardson_odd(pv.split[0], pv.split[1], pv.split[2]);
    pv.error_estimate = err + d2 / 8.0;
    return pv;
}

cplx cauchy_kernel_integral(double r, double k0, double A) {
    if (!(r > 0.0)) throw DomainError("cauchy_kernel_integral: r must be positive");
    if (!(A > std::abs(k0))) throw DomainError("cauchy_kernel_integral: A must exceed |k0|");
    const double lo = (A - k0) * r;
    const double hi = (A + k0) * r;
    cplx bracket = cplx(cos_integral(lo) - cos_integral(hi), 0.0) - kI * (kPi / 2 - sin_integral(hi)) -
                   kI * (kPi / 2 - sin_integral(lo));
    return std::exp(kI * k0 * r) * bracket;
}

cplx cauchy_kernel_integral_at_origin(double k0, double A) {
    if (!(A > std::abs(k0))) throw DomainError("cauchy_kernel_integral: A must exceed |k0|");
    return std::log((A - k0) / (A + k0)) - kI * kPi;
}

cplx exp_over_k_integral(double u1, double u2, double r) {
    if (!(u1 * u2 > 0.0)) throw DomainError("exp_over_k_integral: interval contains 0");
    if (r < 0.0) throw DomainError("exp_over_k_integral: r must be non-negative");
    const double m1 = std::abs(u1), m2 = std::abs(u2);
    const double sgn = u1 > 0 ? 1.0 : -1.0;
    if (r * std::max(m1, m2) < 1e-9) return std::log(u2 / u1) + kI * (u2 - u1) * r;
    // int_{m1}^{m2} e^{ivr}/v dv
    cplx base(cos_integral(m2 * r) - cos_integral(m1 * r), sin_integral(m2 * r) - sin_integral(m1 * r));
    // For negative intervals: int_{u1}^{u2} e^{iur}/u du = int_{m1}^{m2} e^{-ivr}/v dv.
    return sgn > 0 ? base : std::conj(base);
}

double cos_over_k_integral(double k1, double k2, double a) {
    return exp_over_k_integral(k1, k2, std::abs(a)).real();
}

cplx kernel_K_A(const DeltaPotential& pot, double x, double x_prime, double A) {
    const double k0 = pot.k0();
    if (!(A > std::abs(k0))) throw DomainError("kernel_K_A: A must exceed |z|/2");
    const double d = x - x_prime;
    const double r = std::abs(x) + std::abs(x_prime);
    cplx cauchy = r > 0.0 ? cauchy_kernel_integral(r, k0, A) : cauchy_kernel_integral_at_origin(k0, A);
    return sin_ratio(d, A) / kPi - kI * pot.z() / (4.0 * kPi) * cauchy;
}

}  // namespace singres
