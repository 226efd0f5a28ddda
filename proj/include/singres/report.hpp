#pragma once

#include <string>
#include <utility>
#include <vector>

#include "singres/config.hpp"

namespace singres {

inline constexpr int kReportSchemaVersion = 1;

enum class CheckKind {
    within,    // |got - expected| <= tolerance
    exceeds,   // |got - expected| > tolerance
    at_least,  // Re got >= Re expected (tolerance unused)
};

struct PointResult {
    std::string label;
    double x_prime;  // grid coordinate of the row (x', k', alpha, A, ...)
    cplx expected;
    cplx got;
    double abs_err;
    double tolerance;
    CheckKind kind = CheckKind::within;
    bool passed() const;
};

struct ConvergenceRow {
    double param;
    double err;
};

struct VerificationReport {
    std::string experiment;
    std::string config_echo;  // INI text; parse_config(config_echo) re-runs the experiment
    std::vector<PointResult> points;
    std::vector<ConvergenceRow> convergence;
    std::vector<std::pair<std::string, double>> summary;
    bool pass = true;
    double wall_time = 0.0;  // seconds
};

PointResult make_point(std::string label, double x_prime, cplx expected, cplx got, double tolerance,
                       CheckKind kind = CheckKind::within);

// Runs one experiment. Throws ConfigError, ClassViolation, DivergenceError (also for
// ConvergenceError / PvFailure from the numerics).
VerificationReport run(const ExperimentConfig& config, int threads = 1);

// reproducible: wall time and timestamp left out, so equal configs give byte-identical output.
std::string to_json(const VerificationReport& report, bool reproducible);
std::string to_csv(const VerificationReport& report);
std::string convergence_csv(const VerificationReport& report);

// Writes to a temporary file in the same directory, then renames. Throws IoError.
void write_file_atomic(const std::string& path, const std::string& content);

// Writes <dir>/<experiment>.json, or <experiment>.csv and <experiment>_convergence.csv.
// Returns the paths written.
std::vector<std::string> emit(const VerificationReport& report, const std::string& dir, const std::string& format,
                              bool reproducible);

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_config = 2, exit_class = 3, exit_divergence = 4, exit_io = 5 };

// Verbosity from SINGRES_LOG: 0 quiet, 1 info (default), 2 debug.
int log_level();
void log_message(int level, const std::string& text);

}  // namespace singres
