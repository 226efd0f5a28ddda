#pragma once

#include <string>
#include <vector>

#include "singres/special_functions.hpp"

namespace singres {

struct BoundConstants {
    double C;         // 2 sup_{xi > 0} |(1 + 1/xi) sin xi|
    double D_cauchy;  // C + 2C^2, Cauchy-kernel bound
    double D_window;  // 4C, window bounds
    double K;         // Si(r) <= K r / (1 + r)
};

// C by 1-D maximization; K from fit_si_constant(4097) with a 2% margin.
const BoundConstants& bound_constants();

// Fitted K on `points` log-spaced r in [1e-4, 1e4]. Grids with points = 2^m + 1 are nested.
double fit_si_constant(int points);

struct BoundCheck {
    double value;  // left-hand side
    double bound;  // right-hand side
    bool holds() const { return value <= bound; }
    // bound / value, infinite when value is 0
    double margin() const;
};

// |int_{L(A)} e^{ikr}/(k - k0) dk| against A D/((1 + r(A - |k0|))(A - |k0|)).
BoundCheck cauchy_bound(double r, double k0, double A, const BoundConstants& c);
// Distance of the same integral from its two-term large-A form, against 4/((A - |k0|)^2 r^2).
BoundCheck cauchy_tail_bound(double r, double k0, double A);
bool check_lemma1(double r, double k0, double A, const BoundConstants& c);

// |int_{k0-eps}^{k0+eps} e^{iky}/k dk| against eps D/((|k0| - eps)(2 + eps|y|)).
BoundCheck window_bound(double y, double eps, double k0, const BoundConstants& c);
bool check_lemma3(double y, double eps, double k0, const BoundConstants& c);
// |int_{k0-eps}^{k0+eps} sin(kx) sin(kx')/k dk| with k0 = |z|/2, against
// eps D/((|z|/2 - eps)(2 + eps||x| - |x'||)).
BoundCheck window_sin_sin_bound(double x, double x_prime, double eps, double half_z, const BoundConstants& c);
// |int_{k0-eps}^{k0+eps} e^{iky}/(k + k0) dk| against eps D/((2|k0| - eps)(2 + eps|y|)).
BoundCheck shifted_window_bound(double y, double eps, double k0, const BoundConstants& c);

BoundCheck si_bound(double r, double K);
bool check_si_bound(double r, double K);

struct GridSummary {
    std::string name;
    long checks = 0;
    long failures = 0;
    double min_margin = 0.0;
    // Smallest constant that would make every check on the grid hold (0 if not applicable).
    double fitted = 0.0;
    bool passed(double required_margin) const { return failures == 0 && min_margin >= required_margin; }
};

// Grid resolution: n points per axis; n = 2^m + 1 gives nested grids.
// Cauchy bounds on r in [0.1, 10], k0 in [0.5, 2], A in [5, 100].
GridSummary lemma1_grid(int n);
GridSummary lemma1_tail_grid(int n);
// y in [0, 50], |k0| in [0.5, 2] (both signs), eps/|k0| in [0.05, 0.9].
GridSummary lemma3_grid(int n);
// x, x' in [-8, 8], eps/k0 in [0.05, 0.9], k0 = |z|/2 = 1.
GridSummary corollary1_grid(int n);
GridSummary corollary2_grid(int n);
// r on a log grid over [1e-4, 1e4] (4n points) plus r = 0 and r = pi.
GridSummary si_grid(int n);

std::vector<GridSummary> all_bound_grids(int n, int threads = 1);

}  // namespace singres
