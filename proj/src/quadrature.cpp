#include "singres/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include "singres/errors.hpp"

namespace singres {

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    cplx value;
    double error;
};

Segment gk15(const RealIntegrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx kron = fc * kWgk[7];
    cplx gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        cplx s = f(c - dx) + f(c + dx);
        kron += kWgk[j] * s;
        if (j % 2 == 1) gauss += kWg[j / 2] * s;
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, std::abs(kron - gauss)};
}

struct ByError {
    bool operator()(const Segment& x, const Segment& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.a > y.a;
    }
};

}  // namespace

QuadratureResult integrate_adaptive(const RealIntegrand& f, double a, double b,
                                    const AdaptiveOptions& opt) {
    QuadratureResult out;
    if (a == b) return out;
    std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
    const int n0 = std::max(1, opt.initial_panels);
    for (int i = 0; i < n0; ++i) {
        double lo = a + (b - a) * i / n0;
        double hi = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
        heap.push(gk15(f, lo, hi));
        out.evaluations += 15;
    }
    auto totals = [&heap]() {
        auto copy = heap;
        std::vector<Segment> segs;
        while (!copy.empty()) {
            segs.push_back(copy.top());
            copy.pop();
        }
        std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
        cplx v = 0.0;
        double e = 0.0;
        for (const auto& s : segs) {
            v += s.value;
            e += s.error;
        }
        return std::pair{v, e};
    };
    cplx value = 0.0;
    double err = 0.0;
    {
        auto [v, e] = totals();
        value = v;
        err = e;
    }
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) {
        if (out.evaluations + 30 > opt.max_evaluations) break;
        Segment worst = heap.top();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;
        heap.pop();
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        out.evaluations += 30;
        value += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum in positional order so the result does not depend on refinement history rounding.
    auto [v, e] = totals();
    out.value = require_finite(v, "integrate_adaptive");
    out.abs_error_estimate = e;
    out.reliable = e <= std::max(opt.abs_tol, opt.rel_tol * std::abs(v));
    return out;
}

QuadratureResult combine(const QuadratureResult& x, const QuadratureResult& y) {
    return {x.value + y.value, x.abs_error_estimate + y.abs_error_estimate,
            x.evaluations + y.evaluations, x.reliable && y.reliable};
}

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

cplx richardson_odd(cplx at_e, cplx at_half, cplx at_quarter) {
    cplx r1 = 2.0 * at_half - at_e;
    cplx r2 = 2.0 * at_quarter - at_half;
    return (8.0 * r2 - r1) / 7.0;
}

cplx extrapolate_to_zero(std::span<const double> h, std::span<const cplx> v) {
    if (h.size() != v.size() || h.empty()) throw ParameterError("extrapolate_to_zero: bad sizes");
    std::vector<cplx> p(v.begin(), v.end());
    const std::size_t n = p.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
    return p[0];
}

}  // namespace singres

namespace singres {

cplx extrapolate_odd_to_zero(std::span<const double> h, std::span<const cplx> v) {
    if (h.size() != v.size() || h.empty()) throw ParameterError("extrapolate_odd_to_zero: bad sizes");
    const std::size_t n = h.size();
    // Interpolate with 1, h, h^3, ..., h^{2n-3}; the constant is the limit.
    std::vector<std::vector<cplx>> m(n, std::vector<cplx>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][0] = 1.0;
        for (std::size_t j = 1; j < n; ++j) m[i][j] = std::pow(h[i], double(2 * j - 1));
        m[i][n] = v[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        if (std::abs(m[c][c]) == 0.0) throw ParameterError("extrapolate_odd_to_zero: repeated abscissae");
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            cplx f = m[r][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return m[0][n] / m[0][0];
}

}  // namespace singres
