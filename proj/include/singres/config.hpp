#pragma once

#include <map>
#include <string>
#include <vector>

#include "singres/experiments.hpp"
#include "singres/resolution.hpp"

namespace singres {

// Subcommand names, in CLI order.
const std::vector<std::string>& experiment_ids();

struct ExperimentConfig {
    std::string experiment = "verify-identity";
    ModelSpec model = DeltaModel{};
    ResolutionForm form = ResolutionForm::contour_deformed;
    TestFunctionSpec test_function{Gaussian{}, {}};
    SpectralGaussian spectral{};
    LimitSchedule schedule{};
    // Evaluation points: x' for resolution experiments, k' for biorthogonality.
    std::vector<double> points;
    // Secondary grid: smoothing alpha (example1, smooth-limit), k (reflectionless).
    std::vector<double> params;
    double x = 0.3;        // first argument of the residue kernel
    double k = 1.3;        // smooth-limit wavenumber
    double eps = 1e-3;     // residue cross-check excision
    int draws = 10;        // kernel-xcheck
    unsigned seed = 1;
    int grid_points = 5;   // lemma-bounds, per axis
    std::map<std::string, double> tolerances;
    std::string out_dir = ".";
    std::string format = "json";

    // Throws ConfigError on unknown ids, empty grids or non-positive tolerances.
    void validate() const;
    double tolerance(const std::string& key) const;
};

// Defaults for one experiment id (throws ConfigError for an unknown id).
ExperimentConfig default_config(const std::string& experiment);

// "a+bi", "bi", "a" with optional signs; throws ConfigError.
cplx parse_complex(const std::string& text);
std::string format_complex(cplx v);
// The model assumes a purely imaginary coupling; throws ConfigError otherwise.
cplx parse_coupling(const std::string& text);
std::vector<double> parse_list(const std::string& text);
std::string format_list(const std::vector<double>& v);

TestFunctionSpec default_test_function(const std::string& family);

// INI text with sections [experiment], [model], [form], [test_function], [spectral], [schedule],
// [grid], [tolerance], [output]. Keys missing from the text keep the experiment's defaults;
// `experiment` is used when the text has no [experiment] id.
ExperimentConfig parse_config(const std::string& ini_text, const std::string& experiment = "verify-identity");
ExperimentConfig load_config(const std::string& path, const std::string& experiment = "verify-identity");
std::string to_ini(const ExperimentConfig& config);

}  // namespace singres
