#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "singres/special_functions.hpp"

namespace singres {

struct QuadratureResult {
    cplx value{};
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    bool reliable = true;
};

struct AdaptiveOptions {
    double abs_tol = 1e-11;
    double rel_tol = 1e-12;
    long max_evaluations = 400000;
    int initial_panels = 1;
};

using RealIntegrand = std::function<cplx(double)>;
using ComplexIntegrand = std::function<cplx(cplx)>;

// Globally adaptive Gauss-Kronrod (7/15) on [a, b].
QuadratureResult integrate_adaptive(const RealIntegrand& f, double a, double b,
                                    const AdaptiveOptions& opt = {});

// Adds two results; the sum is reliable only if both parts are.
QuadratureResult combine(const QuadratureResult& x, const QuadratureResult& y);

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

// Composite fixed-order Gauss-Legendre over panels of at most `width`.
// T is any value type with T + T and double * T.
template <class F>
auto integrate_panels(F&& f, double a, double b, double width) -> decltype(f(a)) {
    using T = decltype(f(a));
    const GaussRule& rule = gauss_legendre(20);
    T total{};
    if (!(b > a)) return total;
    long n = static_cast<long>(std::ceil((b - a) / width));
    if (n < 1) n = 1;
    const double h = (b - a) / double(n);
    for (long p = 0; p < n; ++p) {
        const double lo = a + h * double(p);
        const double mid = lo + 0.5 * h;
        T panel{};
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            panel = panel + rule.weights[j] * f(mid + 0.5 * h * rule.nodes[j]);
        total = total + (0.5 * h) * panel;
    }
    return total;
}

// Values at eps, eps/2, eps/4 with error terms in odd powers of eps.
cplx richardson_odd(cplx at_e, cplx at_half, cplx at_quarter);

// Polynomial (Neville) extrapolation of v(h) to h = 0.
cplx extrapolate_to_zero(std::span<const double> h, std::span<const cplx> v);
// Same, for an error expansion in odd powers of h only.
cplx extrapolate_odd_to_zero(std::span<const double> h, std::span<const cplx> v);

}  // namespace singres
