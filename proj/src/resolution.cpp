#include "singres/resolution.hpp"

#include <algorithm>
#include <cmath>

#include "singres/contour.hpp"
#include "singres/errors.hpp"
#include "singres/kernels.hpp"
#include "singres/quadrature.hpp"

namespace singres {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Panel width that resolves the test function itself.
double phi_width(const TestFunctionSpec& phi) {
    return std::visit(overloaded{
                          [](const Gaussian& g) { return std::min(0.25, g.sigma / 2.0); },
                          [](const Bump& b) { return std::min(0.25, (b.hi - b.lo) / 16.0); },
                          [](const PlaneWavePacket& p) {
                              return std::min({0.25, p.width / 2.0, 1.0 / std::max(std::abs(p.k0), 1e-3)});
                          },
                          [](const SlowIncrease& s) { return std::min(0.25, 1.0 / std::max(std::abs(s.k0), 1e-3)); },
                          [](const auto&) { return 0.25; },
                      },
                      phi.family);
}

std::vector<double> cut_points(const TestFunctionSpec& phi, double x_prime, double X) {
    std::vector<double> c{-X, 0.0, X};
    if (std::abs(x_prime) < X) c.push_back(x_prime);
    for (double b : breakpoints(phi))
        if (std::abs(b) < X) c.push_back(b);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

template <class F>
cplx integrate_cuts(F&& f, const std::vector<double>& cuts, double width) {
    cplx total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate_panels(f, cuts[i], cuts[i + 1], width);
    return total;
}

cplx extrapolate(const std::vector<double>& h, const std::vector<cplx>& v, bool odd = false) {
    if (v.size() == 1) return v.front();
    cplx r = odd ? extrapolate_odd_to_zero(h, v) : extrapolate_to_zero(h, v);
    require_finite(r, "extrapolation");
    return r;
}

bool increments_shrink(const std::vector<cplx>& v) {
    for (std::size_t i = 2; i < v.size(); ++i)
        if (std::abs(v[i] - v[i - 1]) > std::abs(v[i - 1] - v[i - 2]) * (1.0 + 1e-9) + 1e-13) return false;
    return true;
}

double default_truncation(const LimitSchedule& sched, double x_prime) {
    if (sched.X_truncation > 0.0) return sched.X_truncation;
    return std::max(80.0, 4.0 * std::abs(x_prime) + 40.0);
}

// int K_A(x, x') phi(x) dx. Non-decaying phi: truncated at X with a linear taper
// over the last oscillation period of the sinc.
cplx contour_action(const DeltaPotential& pot, const TestFunctionSpec& phi, double x_prime, double A, double X) {
    const double width = std::min(2.0 / A, phi_width(phi));
    if (decays(phi)) {
        return integrate_against(
            phi, [&](double x) { return kernel_K_A(pot, x, x_prime, A); }, x_prime, width);
    }
    const double period = 2.0 * kPi / A;
    auto f = [&](double x) {
        double taper = std::clamp((X - std::abs(x)) / period, 0.0, 1.0);
        if (taper == 0.0) return cplx(0.0);
        return taper * kernel_K_A(pot, x, x_prime, A) * evaluate(phi, x);
    };
    return integrate_cuts(f, cut_points(phi, x_prime, X), width);
}

// Delta model, decaying phi, one (A, eps) point.
cplx delta_split_form(const DeltaPotential& pot, ResolutionForm form, const TestFunctionSpec& phi, double x_prime,
                      double A, double eps) {
    const cplx z = pot.z();
    auto act = [&](auto kernel, double width) {
        return integrate_against(phi, std::function<cplx(double)>(kernel), x_prime, width);
    };
    cplx split = act([&](double x) { return split_kernel(pot, x, x_prime, A, eps); }, 2.0 / A);
    cplx psi0 = act([&](double x) { return psi0_psi0(pot, x, x_prime); }, 0.25);
    cplx psi0_si = act([&](double x) { return psi0_psi0(pot, x, x_prime) * si_weight(x, x_prime, eps); }, 0.25);
    switch (form) {
    case ResolutionForm::eps_split_full: {
        cplx chords = act(
            [&](double x) { return chord_sinc(pot, x, x_prime, eps) + chord_sin_sin(pot, x, x_prime, eps); }, 0.25);
        return split + chords - z / 4.0 * (psi0 - psi0_si);
    }
    case ResolutionForm::reduced:
        return split - z / 4.0 * (psi0 - psi0_si);
    case ResolutionForm::principal_value:
        return split - z / 4.0 * psi0;
    case ResolutionForm::scattering_paired:
    case ResolutionForm::symmetric_scattering: {
        // Both scattering integrands equal f(k) + f(-k) pointwise, so they share one kernel.
        cplx mirror = act([&](double x) { return mirror_window_kernel(pot, x, x_prime, eps); }, 0.25);
        return split - mirror - z / 4.0 * (psi0 - psi0_si);
    }
    case ResolutionForm::contour_deformed:
        break;
    }
    throw ParameterError("delta_split_form: unexpected form");
}

// Delta model, non-decaying phi: split = K_A - chord_sinc - chord_sin_sin + (z/4) psi0 psi0 [1 - si],
// so each form is K_A minus an eps-local remainder that is integrated with Abel damping.
cplx delta_remainder(const DeltaPotential& pot, ResolutionForm form, const TestFunctionSpec& phi, double x_prime,
                     double eps, const std::vector<double>& deltas) {
    const cplx z = pot.z();
    auto kernel = [&](double x) -> cplx {
        cplx r = chord_sinc(pot, x, x_prime, eps) + chord_sin_sin(pot, x, x_prime, eps);
        switch (form) {
        case ResolutionForm::principal_value:
            return r + z / 4.0 * psi0_psi0(pot, x, x_prime) * si_weight(x, x_prime, eps);
        case ResolutionForm::scattering_paired:
        case ResolutionForm::symmetric_scattering:
            return r + mirror_window_kernel(pot, x, x_prime, eps);
        default:
            return r;
        }
    };
    return abel_integral(phi, kernel, x_prime, deltas);
}

ResolutionResult delta_resolution(const DeltaModel& m, ResolutionForm form, const TestFunctionSpec& phi,
                                  double x_prime, const LimitSchedule& sched) {
    const DeltaPotential pot(m.z);
    ResolutionResult res;
    std::vector<cplx> by_A;

    if (form == ResolutionForm::contour_deformed ||
        (!decays(phi) && form == ResolutionForm::eps_split_full)) {
        // The full eps-split form is K_A identically.
        const double X = default_truncation(sched, x_prime);
        for (double A : sched.A_values) {
            by_A.push_back(contour_action(pot, phi, x_prime, A, X));
            res.sweep.push_back({A, 0.0, by_A.back()});
        }
        res.value = by_A.back();
        res.converged = increments_shrink(by_A);
        return res;
    }

    for (double A : sched.A_values) ContourSpec{A, sched.eps_values.front(), pot.k0()}.validate();

    if (!decays(phi)) {
        const double X = default_truncation(sched, x_prime);
        std::vector<cplx> rem;
        for (double eps : sched.eps_values) rem.push_back(delta_remainder(pot, form, phi, x_prime, eps, sched.delta_values));
        const cplx rem0 = extrapolate(sched.eps_values, rem, true);
        for (double A : sched.A_values) {
            cplx ka = contour_action(pot, phi, x_prime, A, X);
            if (sched.order == LimitOrder::A_then_eps) {
                for (std::size_t j = 0; j < rem.size(); ++j) res.sweep.push_back({A, sched.eps_values[j], ka - rem[j]});
            }
            by_A.push_back(ka - rem0);
            res.sweep.push_back({A, 0.0, by_A.back()});
        }
        res.value = by_A.back();
        res.converged = increments_shrink(by_A);
        return res;
    }

    // grid[i][j] at A_values[i], eps_values[j]
    std::vector<std::vector<cplx>> grid;
    for (double A : sched.A_values) {
        std::vector<cplx> row;
        for (double eps : sched.eps_values) row.push_back(delta_split_form(pot, form, phi, x_prime, A, eps));
        grid.push_back(row);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        by_A.push_back(extrapolate(sched.eps_values, grid[i], true));
        if (sched.order == LimitOrder::A_then_eps) {
            for (std::size_t j = 0; j < grid[i].size(); ++j)
                res.sweep.push_back({sched.A_values[i], sched.eps_values[j], grid[i][j]});
        }
        res.sweep.push_back({sched.A_values[i], 0.0, by_A.back()});
    }
    res.value = by_A.back();
    res.converged = increments_shrink(by_A);
    return res;
}

// Fixed-panel integral over [-A, k0 - h] u [k0 + h, A] plus either the upper
// semicircle of radius h or the folded p.v. piece over (0, h).
template <class G>
cplx k_path_integral(G&& g, double A, double k0, double h, double width, bool principal) {
    auto line = [&](double k) { return g(cplx(k)); };
    cplx total = integrate_panels(line, -A, k0 - h, width) + integrate_panels(line, k0 + h, A, width);
    if (principal) {
        auto folded = [&](double u) { return g(cplx(k0 + u)) + g(cplx(k0 - u)); };
        total += integrate_panels(folded, 0.0, h, h / 4.0);
    } else {
        auto arc = [&](double theta) {
            cplx e = std::exp(kI * (kPi - theta));
            return g(k0 + h * e) * (-kI * h * e);
        };
        total += integrate_panels(arc, 0.0, kPi, kPi / 8.0);
    }
    return total;
}

ResolutionResult smooth_resolution(const SmoothModel& m, ResolutionForm form, const TestFunctionSpec& phi,
                                   double x_prime, const LimitSchedule& sched) {
    const SmoothPotential pot(m.z, m.alpha);
    const bool principal = form == ResolutionForm::principal_value;
    if (form != ResolutionForm::contour_deformed && !principal)
        throw ParameterError("smooth model: only the contour and pv forms are available");
    if (!decays(phi)) throw ClassViolation("smooth model: " + family_name(phi) + " does not decay");
    const double X = effective_support(phi);
    const auto cuts = cut_points(phi, x_prime, X);
    auto g = [&](cplx k) {
        const SmoothModes modes(pot, k);
        const double w = std::min(phi_width(phi), 6.0 / std::max(1.0, std::abs(k)));
        cplx transform = integrate_cuts([&](double x) { return modes.plus(x) * evaluate(phi, x); }, cuts, w);
        return modes.minus(x_prime) * transform;
    };

    cplx discrete = 0.0;
    if (principal) {
        cplx overlap = integrate_against(
            phi, [&](double x) { return psi_zero_smooth(pot, x); }, x_prime, 0.25);
        discrete = -pot.z() / 4.0 * singularity_weight(pot) * psi_zero_smooth(pot, x_prime) * overlap;
    }
    const double k0 = pot.k0();
    // Phi(k) varies on the scale 1/(support of phi); psi_minus(x') on 1/|x'|.
    const double width = std::min({1.0, 6.0 / X, 2.0 / std::max(1.0, std::abs(x_prime))});
    ResolutionResult res;
    std::vector<cplx> by_A;
    for (double A : sched.A_values) {
        if (!(A > std::abs(k0))) throw ParameterError("smooth model: A must exceed |k0|");
        const double h = std::min({0.25, std::abs(k0) / 4.0, (A - std::abs(k0)) / 4.0});
        by_A.push_back(k_path_integral(g, A, k0, h, width, principal) + discrete);
        res.sweep.push_back({A, 0.0, by_A.back()});
    }
    res.value = by_A.back();
    res.converged = increments_shrink(by_A);
    return res;
}

}  // namespace

FormValidity form_validity(ResolutionForm form) {
    switch (form) {
    case ResolutionForm::contour_deformed:
        return {-1.0, true};
    case ResolutionForm::eps_split_full:
    case ResolutionForm::reduced:
        return {-1.0, false};
    case ResolutionForm::principal_value:
    case ResolutionForm::scattering_paired:
    case ResolutionForm::symmetric_scattering:
        return {1.0, false};
    }
    return {1.0, false};
}

std::string form_name(ResolutionForm form) {
    switch (form) {
    case ResolutionForm::contour_deformed:
        return "contour";
    case ResolutionForm::eps_split_full:
        return "eps-split";
    case ResolutionForm::reduced:
        return "reduced";
    case ResolutionForm::principal_value:
        return "pv";
    case ResolutionForm::scattering_paired:
        return "scattering";
    case ResolutionForm::symmetric_scattering:
        return "symmetric";
    }
    return "?";
}

std::optional<ResolutionForm> parse_form(const std::string& name) {
    for (auto f : {ResolutionForm::contour_deformed, ResolutionForm::eps_split_full, ResolutionForm::reduced,
                   ResolutionForm::principal_value, ResolutionForm::scattering_paired,
                   ResolutionForm::symmetric_scattering})
        if (form_name(f) == name) return f;
    return std::nullopt;
}

bool admissible(ResolutionForm form, const TestFunctionSpec& phi) {
    FormValidity v = form_validity(form);
    if (std::holds_alternative<SlowIncrease>(phi.family)) return v.slow_increase;
    return gamma_threshold(phi) > v.gamma_above;
}

std::string order_name(LimitOrder order) {
    switch (order) {
    case LimitOrder::A_then_eps:
        return "A_then_eps";
    case LimitOrder::eps_then_A:
        return "eps_then_A";
    case LimitOrder::alpha_first:
        return "alpha_first";
    }
    return "?";
}

std::optional<LimitOrder> parse_order(const std::string& name) {
    for (auto o : {LimitOrder::A_then_eps, LimitOrder::eps_then_A, LimitOrder::alpha_first})
        if (order_name(o) == name) return o;
    return std::nullopt;
}

void LimitSchedule::validate() const {
    auto check = [](const std::vector<double>& v, bool ascending, const char* what) {
        if (v.empty()) throw ParameterError(std::string("schedule: empty ") + what);
        for (double x : v)
            if (!(x > 0.0) || !std::isfinite(x)) throw ParameterError(std::string("schedule: non-positive ") + what);
        for (std::size_t i = 1; i < v.size(); ++i)
            if (ascending ? !(v[i] > v[i - 1]) : !(v[i] < v[i - 1]))
                throw ParameterError(std::string("schedule: misordered ") + what);
    };
    check(A_values, true, "A_values");
    check(eps_values, false, "eps_values");
    check(delta_values, false, "delta_values");
    check(alpha_values, false, "alpha_values");
    if (X_truncation < 0.0) throw ParameterError("schedule: negative X_truncation");
}

cplx integrate_against(const TestFunctionSpec& phi, const std::function<cplx(double)>& kernel, double x_prime,
                       double width) {
    const double X = effective_support(phi);
    if (!std::isfinite(X)) throw ClassViolation("integrate_against: " + family_name(phi) + " does not decay");
    auto f = [&](double x) { return kernel(x) * evaluate(phi, x); };
    return integrate_cuts(f, cut_points(phi, x_prime, X), std::min(width, phi_width(phi)));
}

cplx abel_integral(const TestFunctionSpec& phi, const std::function<cplx(double)>& kernel, double x_prime,
                   const std::vector<double>& delta_values) {
    if (delta_values.empty()) throw ParameterError("abel_integral: no damping rates");
    const double smallest = *std::min_element(delta_values.begin(), delta_values.end());
    double X = 40.0 / smallest;
    if (decays(phi)) X = std::min(X, effective_support(phi));
    // Fine panels near the origin and x', unit panels in the slowly varying far field.
    const double near_width = phi_width(phi);
    const double near = 20.0 + std::abs(x_prime);
    std::vector<double> cuts = cut_points(phi, x_prime, X);
    for (double c : {-near, near})
        if (std::abs(c) < X) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const GaussRule& rule = gauss_legendre(20);
    // Each node's kernel value serves every damping rate.
    std::vector<cplx> sums(delta_values.size(), 0.0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double mid_ab = 0.5 * (a + b);
        const double width = std::abs(mid_ab) <= near ? near_width : 1.0;
        const long n = std::max(1L, static_cast<long>(std::ceil((b - a) / width)));
        const double h = (b - a) / double(n);
        for (long p = 0; p < n; ++p) {
            const double mid = a + h * (double(p) + 0.5);
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                const double x = mid + 0.5 * h * rule.nodes[j];
                const cplx f = 0.5 * h * rule.weights[j] * kernel(x) * evaluate(phi, x);
                for (std::size_t d = 0; d < delta_values.size(); ++d) {
                    const double damp = delta_values[d] * std::abs(x);
                    if (damp < 40.0) sums[d] += f * std::exp(-damp);
                }
            }
        }
    }
    return extrapolate(delta_values, sums);
}

ResolutionResult apply_resolution(const ModelSpec& model, ResolutionForm form, const TestFunctionSpec& phi,
                                  double x_prime, const LimitSchedule& sched, const ResolutionOptions& opt) {
    validate(phi);
    sched.validate();
    if (!std::isfinite(x_prime)) throw DomainError("apply_resolution: x' must be finite");
    if (sched.order == LimitOrder::alpha_first)
        throw ParameterError("apply_resolution: alpha_first applies to the smoothed-state experiment only");
    if (!opt.allow_out_of_class && !admissible(form, phi))
        throw ClassViolation("form " + form_name(form) + " is not valid for " + family_name(phi));
    return std::visit(overloaded{
                          [&](const DeltaModel& m) { return delta_resolution(m, form, phi, x_prime, sched); },
                          [&](const SmoothModel& m) { return smooth_resolution(m, form, phi, x_prime, sched); },
                      },
                      model);
}

}  // namespace singres
