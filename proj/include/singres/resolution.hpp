#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "singres/delta_model.hpp"
#include "singres/smooth_model.hpp"
#include "singres/test_space.hpp"

namespace singres {

struct DeltaModel {
    cplx z{0.0, 2.0};
};

struct SmoothModel {
    cplx z{0.0, 2.0};
    double alpha = 2.0;
};

using ModelSpec = std::variant<DeltaModel, SmoothModel>;

enum class ResolutionForm {
    contour_deformed,
    eps_split_full,
    reduced,          // two-term form, gamma > -1
    principal_value,  // p.v. integral plus the discrete term, gamma > 1
    scattering_paired,
    symmetric_scattering,
};

struct FormValidity {
    double gamma_above;   // admissible if the test function is in CL_gamma for some gamma above this
    bool slow_increase;   // admits the eta(+-x) e^{ik0x}|x|^kappa family
};

FormValidity form_validity(ResolutionForm form);
std::string form_name(ResolutionForm form);
std::optional<ResolutionForm> parse_form(const std::string& name);
bool admissible(ResolutionForm form, const TestFunctionSpec& phi);

enum class LimitOrder { A_then_eps, eps_then_A, alpha_first };

std::string order_name(LimitOrder order);
std::optional<LimitOrder> parse_order(const std::string& name);

struct LimitSchedule {
    std::vector<double> A_values{50.0, 100.0, 200.0};  // ascending
    std::vector<double> eps_values{0.2, 0.1, 0.05};    // descending
    double X_truncation = 0.0;                          // 0: picked from the test function
    LimitOrder order = LimitOrder::A_then_eps;
    std::vector<double> delta_values{1e-2, 5e-3, 2.5e-3};  // Abel damping rates, descending
    std::vector<double> alpha_values{0.1, 0.05, 0.025};    // alpha_first smoothing, descending
    // Throws ParameterError on empty or misordered lists.
    void validate() const;
};

struct ResolutionOptions {
    bool allow_out_of_class = false;
};

struct SweepEntry {
    double A;
    double eps;  // 0 when the value is already extrapolated in eps (or eps-free)
    cplx value;
};

struct ResolutionResult {
    cplx value;
    std::vector<SweepEntry> sweep;
    // Increments along the A sweep do not grow.
    bool converged = true;
};

// Approximates phi(x') by integrating the resolution kernel of `form` against phi.
// Delta model: kernels in closed form (k first), then the x-integral. Smooth model:
// Phi(k) = int psi_plus phi dx first, then the k-integral (contour or p.v. forms only).
// Throws ClassViolation for an inadmissible (form, phi) pair unless allowed.
ResolutionResult apply_resolution(const ModelSpec& model, ResolutionForm form, const TestFunctionSpec& phi,
                                  double x_prime, const LimitSchedule& sched, const ResolutionOptions& opt = {});

// x-integral of kernel(x) phi(x) for a decaying test function.
cplx integrate_against(const TestFunctionSpec& phi, const std::function<cplx(double)>& kernel, double x_prime,
                       double width);

// Abel-damped integral over |x| <= 40/delta of kernel(x) phi(x) e^{-delta|x|}, extrapolated to delta = 0.
cplx abel_integral(const TestFunctionSpec& phi, const std::function<cplx(double)>& kernel, double x_prime,
                   const std::vector<double>& delta_values);

}  // namespace singres
