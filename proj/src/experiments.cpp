#include "singres/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "singres/contour.hpp"
#include "singres/errors.hpp"
#include "singres/kernels.hpp"
#include "singres/quadrature.hpp"

namespace singres {

namespace {

const AdaptiveOptions kTight{1e-13, 1e-13, 2000000, 1};

QuadratureResult adaptive_unit_panels(const RealIntegrand& f, double a, double b) {
    AdaptiveOptions o = kTight;
    o.initial_panels = std::max(1, static_cast<int>(std::ceil(b - a)));
    return integrate_adaptive(f, a, b, o);
}

// p.v. of int_{-K}^{K} g over a simple pole at k0, by folding (0, h) about k0.
cplx folded_principal_value(const RealIntegrand& g, double k0, double h, double K) {
    auto folded = [&](double u) { return g(k0 + u) + g(k0 - u); };
    cplx v = integrate_adaptive(folded, 0.0, h, kTight).value;
    v += adaptive_unit_panels(g, -K, k0 - h).value;
    v += adaptive_unit_panels(g, k0 + h, K).value;
    return v;
}

cplx psi0_overlap(const DeltaPotential& pot, double alpha) {
    // int psi0(x) psi0(x; alpha) dx = 2 int_0^inf e^{(z - alpha/2) x} dx
    const cplx rate = pot.z() - alpha / 2.0;
    const double X = 60.0 / (alpha / 2.0);
    return 2.0 * integrate_panels([&](double x) { return std::exp(rate * x); }, 0.0, X, 0.25);
}

cplx mirror_pole_kernel(const DeltaPotential& pot, double x, double x_prime, double eps) {
    const double k0 = pot.k0();
    const double r = std::abs(x) + std::abs(x_prime);
    return -kI * pot.z() / (4.0 * kPi) * std::exp(kI * k0 * r) *
           exp_over_k_integral(-2.0 * k0 - eps, -2.0 * k0 + eps, r);
}

}  // namespace

cplx evaluate(const SpectralGaussian& phi, double k) {
    const double t = (k - phi.center) / phi.width;
    return std::exp(-0.5 * t * t);
}

BiorthogonalityResult biorthogonality_check(const DeltaPotential& pot, const SpectralGaussian& phi, double k_prime,
                                            double A) {
    if (!(A > 0.0) || !(phi.width > 0.0)) throw ParameterError("biorthogonality_check: need A > 0, width > 0");
    const cplx iz = kI * pot.z();
    const double lo = phi.center - 10.0 * phi.width, hi = phi.center + 10.0 * phi.width;
    const double width = std::min(2.0 / A, phi.width / 4.0);
    auto psi = [&](double k) { return (1.0 + 2.0 * k / iz) * evaluate(phi, k); };
    auto sinc_part = [&](double k) { return sin_ratio(k - k_prime, A) * psi(k); };
    cplx sinc = 0.0;
    if (k_prime > lo && k_prime < hi) {
        sinc = integrate_panels(sinc_part, lo, k_prime, width) + integrate_panels(sinc_part, k_prime, hi, width);
    } else {
        sinc = integrate_panels(sinc_part, lo, hi, width);
    }
    cplx wave = integrate_panels([&](double k) { return std::exp(kI * k * A) * evaluate(phi, k); }, lo, hi, width);
    BiorthogonalityResult r;
    r.sinc_term = sinc / kPi;
    // sin(k'A)/k' is A at k' = 0.
    r.boundary = sin_ratio(k_prime, A) * wave / kPi;
    r.value = r.sinc_term - r.boundary;
    r.expected = psi(k_prime);
    return r;
}

cplx smoothed_state_transform(const DeltaPotential& pot, double alpha, cplx k) {
    const cplx z = pot.z();
    const cplx beta = (alpha - z) / 2.0;
    const cplx iz = kI * z;
    cplx v = 2.0 * beta / (beta * beta + k * k) - iz / (2.0 * k + iz) * 2.0 / (beta - kI * k);
    return v / std::sqrt(2.0 * kPi);
}

SmoothedStateSplit example1_split(const DeltaPotential& pot, double alpha, double x_prime,
                                  const LimitSchedule& sched) {
    sched.validate();
    const cplx z = pot.z();
    const double k0 = pot.k0();
    const double K = sched.A_values.back();
    auto continuum_integrand = [&](double a) {
        return [&, a](double k) { return psi_minus(pot, x_prime, k) * smoothed_state_transform(pot, a, k); };
    };
    SmoothedStateSplit out;
    const cplx p0 = psi_zero(pot, x_prime);

    if (sched.order == LimitOrder::alpha_first) {
        const double eps = sched.eps_values.front();
        std::vector<cplx> cont, sing;
        for (double a : sched.alpha_values) {
            if (!(a > 0.0)) throw ParameterError("example1_split: alpha must be positive");
            auto g = continuum_integrand(a);
            cont.push_back(adaptive_unit_panels(g, -K, k0 - eps).value + adaptive_unit_panels(g, k0 + eps, K).value);
            sing.push_back(-z / 4.0 * p0 * psi0_overlap(pot, a));
            out.alpha_values.push_back(a);
            out.alpha_totals.push_back(cont.back() + sing.back());
        }
        out.continuum = extrapolate_to_zero(sched.alpha_values, cont);
        out.singular = extrapolate_to_zero(sched.alpha_values, sing);
        // alpha -> 0 first: the transform vanishes off k0, the singular part keeps half of psi0.
        out.expected_continuum = 0.0;
        out.expected_singular = p0 / 2.0;
        return out;
    }

    if (!(alpha > 0.0) || !(alpha < std::abs(z))) throw ParameterError("example1_split: need 0 < alpha < |z|");
    out.continuum = folded_principal_value(continuum_integrand(alpha), k0, 0.5 * std::abs(k0), K);
    out.singular = -z / 4.0 * p0 * psi0_overlap(pot, alpha);
    const cplx smoothed = std::exp((z - alpha) * std::abs(x_prime) / 2.0);
    out.expected_singular = p0 / (2.0 - alpha / z);
    out.expected_continuum = smoothed - out.expected_singular;
    require_finite(out.continuum, "example1_split");
    return out;
}

HalfMassParts half_mass_complement(const DeltaPotential& pot, double x_prime, double eps,
                                   const std::vector<double>& delta_values) {
    if (!(eps > 0.0)) throw ParameterError("half_mass_complement: eps must be positive");
    const TestFunctionSpec psi0{SingularPsi0{pot.z()}, std::nullopt};
    HalfMassParts p;
    p.sinc = window_term_action(pot, WindowTerm::chord_sinc, psi0, x_prime, eps, delta_values);
    p.sin_sin = window_term_action(pot, WindowTerm::chord_sin_sin, psi0, x_prime, eps, delta_values);
    return p;
}

HalfMassReport half_mass_experiment(const DeltaPotential& pot, double x_prime, const LimitSchedule& sched) {
    sched.validate();
    const TestFunctionSpec psi0{SingularPsi0{pot.z()}, std::nullopt};
    HalfMassReport rep;
    rep.principal_value = apply_resolution(DeltaModel{pot.z()}, ResolutionForm::principal_value, psi0, x_prime, sched,
                                           {.allow_out_of_class = true})
                              .value;
    std::vector<cplx> sinc, sin_sin;
    for (double eps : sched.eps_values) {
        HalfMassParts p = half_mass_complement(pot, x_prime, eps, sched.delta_values);
        sinc.push_back(p.sinc);
        sin_sin.push_back(p.sin_sin);
    }
    rep.complement.sinc = extrapolate_odd_to_zero(sched.eps_values, sinc);
    rep.complement.sin_sin = extrapolate_odd_to_zero(sched.eps_values, sin_sin);
    const cplx z = pot.z();
    rep.sinc_expected = 0.5 * std::exp(-z * x_prime / 2.0);
    rep.sin_sin_expected = x_prime >= 0.0 ? 0.5 * (std::exp(z * x_prime / 2.0) - std::exp(-z * x_prime / 2.0)) : 0.0;
    rep.half = psi_zero(pot, x_prime) / 2.0;
    return rep;
}

cplx residue_extraction(const ModelSpec& model, double x, double x_prime) {
    if (const auto* d = std::get_if<DeltaModel>(&model)) {
        const DeltaPotential pot(d->z);
        return -pot.z() / 4.0 * psi_zero(pot, x) * psi_zero(pot, x_prime);
    }
    const auto& s = std::get<SmoothModel>(model);
    const SmoothPotential pot(s.z, s.alpha);
    return -pot.z() / 4.0 * singularity_weight(pot) * psi_zero_smooth(pot, x) * psi_zero_smooth(pot, x_prime);
}

ResidueCheck residue_crosscheck(const ModelSpec& model, double x, double x_prime, double A, double eps) {
    ComplexIntegrand f;
    double k0 = 0.0;
    if (const auto* d = std::get_if<DeltaModel>(&model)) {
        const DeltaPotential pot(d->z);
        k0 = pot.k0();
        f = [pot, x, x_prime](cplx k) { return psi_plus(pot, x, k) * psi_minus(pot, x_prime, k); };
    } else {
        const auto& s = std::get<SmoothModel>(model);
        const SmoothPotential pot(s.z, s.alpha);
        k0 = pot.k0();
        f = [pot, x, x_prime](cplx k) { return psi_plus_smooth(pot, x, k) * psi_minus_smooth(pot, x_prime, k); };
    }
    ResidueCheck out;
    for (int i = 0; i < 3; ++i) {
        const double e = eps / double(1 << i);
        cplx contour = integrate_contour(f, {A, e, k0}).value;
        cplx split = pv_split_integral(f, k0, e, A).value;
        out.per_eps.push_back(contour - split);
    }
    out.extracted = richardson_odd(out.per_eps[0], out.per_eps[1], out.per_eps[2]);
    out.expected = residue_extraction(model, x, x_prime);
    return out;
}

double kernel_xcheck(const DeltaPotential& pot, double A, int draws, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const ContourSpec spec{A, std::min(0.25, pot.k0() / 4.0), pot.k0()};
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double x = u(rng), xp = u(rng);
        auto f = [&](cplx k) { return psi_plus(pot, x, k) * psi_minus(pot, xp, k); };
        cplx q = integrate_contour(f, spec, kTight).value;
        worst = std::max(worst, std::abs(q - kernel_K_A(pot, x, xp, A)));
    }
    return worst;
}

std::string window_term_name(WindowTerm term) {
    switch (term) {
    case WindowTerm::chord_sinc:
        return "chord_sinc";
    case WindowTerm::chord_sin_sin:
        return "chord_sin_sin";
    case WindowTerm::si_correction:
        return "si_correction";
    case WindowTerm::mirror_pole:
        return "mirror_pole";
    }
    return "?";
}

cplx window_term_action(const DeltaPotential& pot, WindowTerm term, const TestFunctionSpec& phi, double x_prime,
                        double eps, const std::vector<double>& delta_values) {
    std::function<cplx(double)> kernel;
    switch (term) {
    case WindowTerm::chord_sinc:
        kernel = [&](double x) { return chord_sinc(pot, x, x_prime, eps); };
        break;
    case WindowTerm::chord_sin_sin:
        kernel = [&](double x) { return chord_sin_sin(pot, x, x_prime, eps); };
        break;
    case WindowTerm::si_correction:
        kernel = [&](double x) { return pot.z() / 4.0 * psi0_psi0(pot, x, x_prime) * si_weight(x, x_prime, eps); };
        break;
    case WindowTerm::mirror_pole:
        kernel = [&](double x) { return mirror_pole_kernel(pot, x, x_prime, eps); };
        break;
    }
    return abel_integral(phi, kernel, x_prime, delta_values);
}

std::vector<DecayRow> decay_experiment(const DeltaPotential& pot, WindowTerm term, const TestFunctionSpec& phi,
                                       double x_prime, const std::vector<double>& eps_values,
                                       const std::vector<double>& delta_values) {
    std::vector<DecayRow> rows;
    for (double eps : eps_values)
        rows.push_back({eps, window_term_action(pot, term, phi, x_prime, eps, delta_values)});
    return rows;
}

}  // namespace singres
