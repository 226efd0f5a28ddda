#include "singres/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "singres/contour.hpp"
#include "singres/errors.hpp"
#include "singres/parallel.hpp"
#include "singres/quadrature.hpp"

namespace singres {

namespace {

const AdaptiveOptions kWindowOpts{1e-14, 1e-13, 400000, 4};

double sin_factor(double xi) { return std::abs((1.0 + 1.0 / xi) * std::sin(xi)); }

double maximize_sin_factor() {
    // Beyond xi = 20 the factor is below 1.05, far under the maximum near xi = 1.2.
    double best_xi = 1e-3, best = 0.0;
    for (double xi = 1e-3; xi <= 20.0; xi += 1e-3) {
        const double v = sin_factor(xi);
        if (v > best) best = v, best_xi = xi;
    }
    double a = best_xi - 1e-3, b = best_xi + 1e-3;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 80; ++it) {
        const double c = b - g * (b - a), d = a + g * (b - a);
        if (sin_factor(c) > sin_factor(d))
            b = d;
        else
            a = c;
    }
    return std::max(best, sin_factor(0.5 * (a + b)));
}

// lo * (hi/lo)^(i/(n-1))
double log_node(double lo, double hi, int i, int n) {
    return n == 1 ? lo : lo * std::pow(hi / lo, double(i) / double(n - 1));
}

double lin_node(double lo, double hi, int i, int n) {
    return n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
}

void tally(GridSummary& s, const BoundCheck& c, double fitted) {
    ++s.checks;
    if (!c.holds()) ++s.failures;
    s.min_margin = std::min(s.min_margin, c.margin());
    s.fitted = std::max(s.fitted, fitted);
}

GridSummary start(const char* name) {
    GridSummary s;
    s.name = name;
    s.min_margin = std::numeric_limits<double>::infinity();
    return s;
}

void require_points(int n) {
    if (n < 2) throw ParameterError("bound grid: need at least 2 points per axis");
}

}  // namespace

double BoundCheck::margin() const {
    if (value == 0.0) return bound >= 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return bound / value;
}

double fit_si_constant(int points) {
    if (points < 2) throw ParameterError("fit_si_constant: need at least 2 points");
    double K = 0.0;
    for (int i = 0; i < points; ++i) {
        const double r = log_node(1e-4, 1e4, i, points);
        K = std::max(K, sin_integral(r) * (1.0 + r) / r);
    }
    return K;
}

const BoundConstants& bound_constants() {
    static const BoundConstants c = [] {
        BoundConstants b{};
        b.C = 2.0 * maximize_sin_factor();
        b.D_cauchy = b.C + 2.0 * b.C * b.C;
        b.D_window = 4.0 * b.C;
        b.K = 1.02 * fit_si_constant(4097);
        return b;
    }();
    return c;
}

BoundCheck cauchy_bound(double r, double k0, double A, const BoundConstants& c) {
    const double gap = A - std::abs(k0);
    return {std::abs(cauchy_kernel_integral(r, k0, A)), A * c.D_cauchy / ((1.0 + r * gap) * gap)};
}

BoundCheck cauchy_tail_bound(double r, double k0, double A) {
    const double gap = A - std::abs(k0);
    const cplx lead = (std::exp(kI * A * r) / (A - k0) + std::exp(-kI * A * r) / (A + k0)) / (kI * r);
    return {std::abs(cauchy_kernel_integral(r, k0, A) - lead), 4.0 / (gap * gap * r * r)};
}

bool check_lemma1(double r, double k0, double A, const BoundConstants& c) {
    return cauchy_bound(r, k0, A, c).holds() && cauchy_tail_bound(r, k0, A).holds();
}

BoundCheck window_bound(double y, double eps, double k0, const BoundConstants& c) {
    if (!(eps > 0.0) || !(std::abs(k0) > eps)) throw DomainError("window_bound: need 0 < eps < |k0|");
    auto f = [&](double k) { return std::exp(kI * k * y) / k; };
    const double v = std::abs(integrate_adaptive(f, k0 - eps, k0 + eps, kWindowOpts).value);
    return {v, eps * c.D_window / ((std::abs(k0) - eps) * (2.0 + eps * std::abs(y)))};
}

bool check_lemma3(double y, double eps, double k0, const BoundConstants& c) {
    return window_bound(y, eps, k0, c).holds();
}

BoundCheck window_sin_sin_bound(double x, double x_prime, double eps, double half_z, const BoundConstants& c) {
    if (!(eps > 0.0) || !(half_z > eps)) throw DomainError("window_sin_sin_bound: need 0 < eps < |z|/2");
    auto f = [&](double k) { return cplx(std::sin(k * x) * std::sin(k * x_prime) / k, 0.0); };
    const double v = std::abs(integrate_adaptive(f, half_z - eps, half_z + eps, kWindowOpts).value);
    const double spread = std::abs(std::abs(x) - std::abs(x_prime));
    return {v, eps * c.D_window / ((half_z - eps) * (2.0 + eps * spread))};
}

BoundCheck shifted_window_bound(double y, double eps, double k0, const BoundConstants& c) {
    if (!(eps > 0.0) || !(std::abs(k0) > eps)) throw DomainError("shifted_window_bound: need 0 < eps < |k0|");
    auto f = [&](double k) { return std::exp(kI * k * y) / (k + k0); };
    const double v = std::abs(integrate_adaptive(f, k0 - eps, k0 + eps, kWindowOpts).value);
    return {v, eps * c.D_window / ((2.0 * std::abs(k0) - eps) * (2.0 + eps * std::abs(y)))};
}

BoundCheck si_bound(double r, double K) {
    if (r < 0.0) throw DomainError("si_bound: r must be non-negative");
    return {std::abs(sin_integral(r)), K * r / (1.0 + r)};
}

bool check_si_bound(double r, double K) { return si_bound(r, K).holds(); }

GridSummary lemma1_grid(int n) {
    require_points(n);
    const BoundConstants& c = bound_constants();
    GridSummary s = start("lemma1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const double r = log_node(0.1, 10.0, i, n), k0 = lin_node(0.5, 2.0, j, n);
                const double A = log_node(5.0, 100.0, l, n), gap = A - k0;
                const BoundCheck b = cauchy_bound(r, k0, A, c);
                tally(s, b, b.value * (1.0 + r * gap) * gap / A);
            }
    return s;
}

GridSummary lemma1_tail_grid(int n) {
    require_points(n);
    GridSummary s = start("lemma1-tail");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const double r = log_node(0.1, 10.0, i, n), k0 = lin_node(0.5, 2.0, j, n);
                const double A = log_node(5.0, 100.0, l, n), gap = A - k0;
                const BoundCheck b = cauchy_tail_bound(r, k0, A);
                tally(s, b, b.value * gap * gap * r * r);
            }
    return s;
}

GridSummary lemma3_grid(int n) {
    require_points(n);
    const BoundConstants& c = bound_constants();
    GridSummary s = start("lemma3");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                for (double sign : {1.0, -1.0}) {
                    const double y = lin_node(0.0, 50.0, i, n), m = lin_node(0.5, 2.0, j, n);
                    const double eps = lin_node(0.05, 0.9, l, n) * m;
                    const BoundCheck b = window_bound(y, eps, sign * m, c);
                    tally(s, b, b.value * (m - eps) * (2.0 + eps * y) / eps);
                }
    return s;
}

GridSummary corollary1_grid(int n) {
    require_points(n);
    const BoundConstants& c = bound_constants();
    GridSummary s = start("corollary1");
    const double half_z = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const double x = lin_node(-8.0, 8.0, i, n), xp = lin_node(-8.0, 8.0, j, n);
                const double eps = lin_node(0.05, 0.9, l, n) * half_z;
                const BoundCheck b = window_sin_sin_bound(x, xp, eps, half_z, c);
                const double spread = std::abs(std::abs(x) - std::abs(xp));
                tally(s, b, b.value * (half_z - eps) * (2.0 + eps * spread) / eps);
            }
    return s;
}

GridSummary corollary2_grid(int n) {
    require_points(n);
    const BoundConstants& c = bound_constants();
    GridSummary s = start("corollary2");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                for (double sign : {1.0, -1.0}) {
                    const double y = lin_node(0.0, 50.0, i, n), m = lin_node(0.5, 2.0, j, n);
                    const double eps = lin_node(0.05, 0.9, l, n) * m;
                    const BoundCheck b = shifted_window_bound(y, eps, sign * m, c);
                    tally(s, b, b.value * (2.0 * m - eps) * (2.0 + eps * y) / eps);
                }
    return s;
}

GridSummary si_grid(int n) {
    require_points(n);
    const double K = bound_constants().K;
    GridSummary s = start("si");
    const int points = 4 * (n - 1) + 1;
    auto add = [&](double r) {
        const BoundCheck b = si_bound(r, K);
        tally(s, b, r > 0.0 ? b.value * (1.0 + r) / r : 0.0);
    };
    add(0.0);
    add(kPi);
    for (int i = 0; i < points; ++i) add(log_node(1e-4, 1e4, i, points));
    return s;
}

std::vector<GridSummary> all_bound_grids(int n, int threads) {
    using Runner = GridSummary (*)(int);
    static const Runner runners[] = {lemma1_grid, lemma1_tail_grid, lemma3_grid, corollary1_grid, corollary2_grid,
                                     si_grid};
    bound_constants();  // initialize once before fanning out
    return parallel_map(std::size(runners), threads, [&](std::size_t i) { return runners[i](n); });
}

}  // namespace singres
