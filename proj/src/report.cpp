#include "singres/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>

#include "singres/appendix.hpp"
#include "singres/errors.hpp"
#include "singres/experiments.hpp"
#include "singres/parallel.hpp"
#include "singres/smooth_model.hpp"

namespace singres {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

DeltaPotential delta_potential(const ExperimentConfig& c) {
    const auto* d = std::get_if<DeltaModel>(&c.model);
    if (!d) throw ConfigError(c.experiment + ": needs the delta model");
    return DeltaPotential(d->z);
}

const SmoothModel& smooth_model(const ExperimentConfig& c) {
    const auto* s = std::get_if<SmoothModel>(&c.model);
    if (!s) throw ConfigError(c.experiment + ": needs the smooth model");
    return *s;
}

void run_verify_identity(const ExperimentConfig& c, int threads, VerificationReport& rep) {
    const double tol = c.tolerance("abs");
    auto results = parallel_map(c.points.size(), threads, [&](std::size_t i) {
        return apply_resolution(c.model, c.form, c.test_function, c.points[i], c.schedule);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].converged)
            throw DivergenceError("verify-identity: A sweep does not settle at x' = " + num(c.points[i]));
        const cplx want = evaluate(c.test_function, c.points[i]);
        rep.points.push_back(make_point("phi", c.points[i], want, results[i].value, tol));
    }
    for (double A : c.schedule.A_values) {
        double worst = 0.0;
        for (std::size_t i = 0; i < results.size(); ++i)
            for (const SweepEntry& e : results[i].sweep)
                if (e.A == A && e.eps == 0.0)
                    worst = std::max(worst, std::abs(e.value - evaluate(c.test_function, c.points[i])));
        rep.convergence.push_back({A, worst});
    }
}

void run_biorthogonality(const ExperimentConfig& c, int threads, VerificationReport& rep) {
    const DeltaPotential pot = delta_potential(c);
    const double tol = c.tolerance("abs");
    const auto& As = c.schedule.A_values;
    // rows[a][i]: A_values[a], points[i]
    auto rows = parallel_map(As.size(), threads, [&](std::size_t a) {
        std::vector<BiorthogonalityResult> row;
        for (double kp : c.points) row.push_back(biorthogonality_check(pot, c.spectral, kp, As[a]));
        return row;
    });
    for (std::size_t a = 0; a < As.size(); ++a) {
        double worst = 0.0;
        for (const auto& r : rows[a]) worst = std::max(worst, std::abs(r.value - r.expected));
        rep.convergence.push_back({As[a], worst});
    }
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const auto& r = rows.back()[i];
        rep.points.push_back(make_point("weighted_phi", c.points[i], r.expected, r.value, tol));
    }
    rep.summary.push_back({"k0", pot.k0()});
    rep.summary.push_back({"weight_at_k0", std::abs(1.0 + 2.0 * pot.k0() / (kI * pot.z()))});
}

void run_example1(const ExperimentConfig& c, int threads, VerificationReport& rep) {
    const DeltaPotential pot = delta_potential(c);
    const double tol = c.tolerance("split"), tol_af = c.tolerance("alpha_first");
    LimitSchedule normal = c.schedule, first = c.schedule;
    normal.order = LimitOrder::A_then_eps;
    first.order = LimitOrder::alpha_first;
    struct Job {
        double alpha;  // 0 for the alpha-first run
        double x_prime;
    };
    std::vector<Job> jobs;
    for (double a : c.params)
        for (double xp : c.points) jobs.push_back({a, xp});
    for (double xp : c.points) jobs.push_back({0.0, xp});
    auto out = parallel_map(jobs.size(), threads, [&](std::size_t i) {
        return jobs[i].alpha > 0.0 ? example1_split(pot, jobs[i].alpha, jobs[i].x_prime, normal)
                                   : example1_split(pot, 0.0, jobs[i].x_prime, first);
    });
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& s = out[i];
        const double xp = jobs[i].x_prime;
        if (jobs[i].alpha > 0.0) {
            const std::string tag = "alpha=" + num(jobs[i].alpha);
            rep.points.push_back(make_point("continuum " + tag, xp, s.expected_continuum, s.continuum, tol));
            rep.points.push_back(make_point("singular " + tag, xp, s.expected_singular, s.singular, tol));
        } else {
            const cplx half = psi_zero(pot, xp) / 2.0;
            rep.points.push_back(make_point("alpha_first total", xp, half, s.continuum + s.singular, tol_af));
            if (xp == c.points.front())
                for (std::size_t j = 0; j < s.alpha_values.size(); ++j)
                    rep.convergence.push_back({s.alpha_values[j], std::abs(s.alpha_totals[j] - half)});
        }
    }
    // Two candidates for the binorm of psi0: the alpha -> 0 limit -2/z, and the alpha-first half weight.
    const cplx binorm = -2.0 / pot.z();
    rep.summary.push_back({"binorm_alpha_limit_re", binorm.real()});
    rep.summary.push_back({"binorm_alpha_limit_im", binorm.imag()});
}

void run_half_mass(const ExperimentConfig& c, int threads, VerificationReport& rep) {
    const DeltaPotential pot = delta_potential(c);
    const double tol = c.tolerance("half"), tol_sum = c.tolerance("sum");
    auto out = parallel_map(c.points.size(), threads,
                            [&](std::size_t i) { return half_mass_experiment(pot, c.points[i], c.schedule); });
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto& h = out[i];
        const double xp = c.points[i];
        rep.points.push_back(make_point("pv", xp, h.half, h.principal_value, tol));
        rep.points.push_back(make_point("complement", xp, h.half, h.complement.total(), tol));
        rep.points.push_back(make_point("sum", xp, psi_zero(pot, xp), h.sum(), tol_sum));
    }
}

void run_residue(const ExperimentConfig& c, int threads, VerificationReport& rep) {
    const double tol = c.tolerance(std::holds_alternative<DeltaModel>(c.model) ? "delta" : "smooth");
    const double A = c.schedule.A_values.back();
    auto out = parallel_map(c.points.size(), threads,
                            [&](std::size_t i) { return residue_crosscheck(c.model, c.x, c.points[i], A, c.eps); });
    for (std::size_t i = 0; i < out.size(); ++i)
        rep.points.push_back(make_point("residue x=" + num(c.x), c.points[i], out[i].expected, out[i].extracted, tol));
    const double eps_steps[] = {c.eps, c.eps / 2.0, c.eps / 4.0};
    for (std::size_t j = 0; j < out.front().per_eps.size() && j < 3; ++j)
        rep.convergence.push_back({eps_steps[j], std::abs(out.front().per_eps[j] - out.front().expected)});
    rep.summary.push_back({"A", A});
}

void run_smooth_limit(const ExperimentConfig& c, int threads, VerificationReport& rep) {
    const cplx z = smooth_model(c).z;
    const DeltaPotential delta(z);
    const double tol = c.tolerance("ratio");
    struct Sup {
        double plus, minus;
    };
    auto sups = parallel_map(c.params.size(), threads, [&](std::size_t a) {
        const SmoothPotential pot(z, c.params[a]);
        Sup s{0.0, 0.0};
        for (int i = 0; i <= 400; ++i) {
            const double x = -2.0 + 4.0 * i / 400.0;
            s.plus = std::max(s.plus, std::abs(psi_plus_smooth(pot, x, c.k) - psi_plus(delta, x, c.k)));
            s.minus = std::max(s.minus, std::abs(psi_minus_smooth(pot, x, c.k) - psi_minus(delta, x, c.k)));
        }
        return s;
    });
    for (std::size_t a = 0; a < sups.size(); ++a) {
        rep.convergence.push_back({c.params[a], std::max(sups[a].plus, sups[a].minus)});
        if (a == 0) continue;
        // Expected error ratio for a step alpha_prev -> alpha under O(1/alpha) convergence.
        const double expect = c.params[a - 1] / c.params[a];
        rep.points.push_back(
            make_point("plus ratio", c.params[a], expect, sups[a].plus / sups[a - 1].plus, tol * expect));
        rep.points.push_back(
            make_point("minus ratio", c.params[a], expect, sups[a].minus / sups[a - 1].minus, tol * expect));
    }
    rep.summary.push_back({"k", c.k});
}

void run_reflectionless(const ExperimentConfig& c, VerificationReport& rep) {
    const double alpha = smooth_model(c).alpha;
    const double pert = c.tolerance("perturbation");
    const SmoothPotential exact = SmoothPotential::general(2.0 * alpha, alpha);
    const SmoothPotential off = SmoothPotential::general(2.0 * alpha * (1.0 + pert), alpha);
    for (double k : c.params) {
        rep.points.push_back(make_point("R at z=2alpha", k, 0.0, reflection_amplitude_smooth(exact, k),
                                        c.tolerance("zero")));
        rep.points.push_back(make_point("R perturbed", k, 0.0, reflection_amplitude_smooth(off, k),
                                        c.tolerance("perturbed"), CheckKind::exceeds));
    }
    rep.summary.push_back({"alpha", alpha});
    rep.summary.push_back({"z", 2.0 * alpha});
}

void run_susy(const ExperimentConfig& c, VerificationReport& rep) {
    const SmoothModel& m = smooth_model(c);
    const SmoothPotential pot(m.z, m.alpha), flipped(-m.z, m.alpha);
    const SuperpotentialSpec chi{SuperpotentialFamily::tanh, m.z, m.alpha};
    const double tol = c.tolerance("abs");
    const cplx shift = m.z * m.z / 4.0;
    for (double x : c.points) {
        rep.points.push_back(make_point("V+ = chi^2 + chi'", x, shift + potential(pot, x),
                                        partner_potential(chi, x, +1), tol));
        rep.points.push_back(make_point("V- = chi^2 - chi'", x, shift + potential(flipped, x),
                                        partner_potential(chi, x, -1), tol));
        const ValueDerivative p = psi_zero_smooth_dx(pot, x);
        rep.points.push_back(make_point("psi0' = chi psi0", x, superpotential(chi, x) * p.value, p.derivative, tol));
    }
}

void run_lemma_bounds(const ExperimentConfig& c, int threads, VerificationReport& rep) {
    const double margin = c.tolerance("margin");
    const auto grids = all_bound_grids(c.grid_points, threads);
    for (std::size_t i = 0; i < grids.size(); ++i) {
        const GridSummary& g = grids[i];
        const double got = std::isfinite(g.min_margin) ? g.min_margin : std::numeric_limits<double>::max();
        rep.points.push_back(make_point(g.name + " min margin", double(i), margin, got, 0.0, CheckKind::at_least));
        rep.summary.push_back({g.name + "_checks", double(g.checks)});
        rep.summary.push_back({g.name + "_failures", double(g.failures)});
        rep.summary.push_back({g.name + "_fitted", g.fitted});
    }
    const BoundConstants& k = bound_constants();
    rep.summary.push_back({"C", k.C});
    rep.summary.push_back({"D_cauchy", k.D_cauchy});
    rep.summary.push_back({"D_window", k.D_window});
    rep.summary.push_back({"K", k.K});
}

void run_kernel_xcheck(const ExperimentConfig& c, int threads, VerificationReport& rep) {
    const DeltaPotential pot = delta_potential(c);
    const double tol = c.tolerance("abs");
    const auto& As = c.schedule.A_values;
    auto errs = parallel_map(As.size(), threads, [&](std::size_t i) {
        return kernel_xcheck(pot, As[i], c.draws, c.seed + static_cast<unsigned>(i));
    });
    for (std::size_t i = 0; i < As.size(); ++i) {
        rep.points.push_back(make_point("max |K_A - quadrature|", As[i], 0.0, errs[i], tol));
        rep.convergence.push_back({As[i], errs[i]});
    }
}

nlohmann::ordered_json complex_json(cplx v) { return {v.real(), v.imag()}; }

std::string kind_name(CheckKind k) {
    switch (k) {
    case CheckKind::within:
        return "within";
    case CheckKind::exceeds:
        return "exceeds";
    case CheckKind::at_least:
        return "at_least";
    }
    return "?";
}

}  // namespace

bool PointResult::passed() const {
    switch (kind) {
    case CheckKind::within:
        return abs_err <= tolerance;
    case CheckKind::exceeds:
        return abs_err > tolerance;
    case CheckKind::at_least:
        return got.real() >= expected.real();
    }
    return false;
}

PointResult make_point(std::string label, double x_prime, cplx expected, cplx got, double tolerance, CheckKind kind) {
    return {std::move(label), x_prime, expected, got, std::abs(got - expected), tolerance, kind};
}

VerificationReport run(const ExperimentConfig& config, int threads) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.experiment = config.experiment;
    rep.config_echo = to_ini(config);
    log_message(1, "running " + config.experiment);
    try {
        const std::string& id = config.experiment;
        if (id == "verify-identity")
            run_verify_identity(config, threads, rep);
        else if (id == "biorthogonality")
            run_biorthogonality(config, threads, rep);
        else if (id == "example1")
            run_example1(config, threads, rep);
        else if (id == "half-mass")
            run_half_mass(config, threads, rep);
        else if (id == "residue")
            run_residue(config, threads, rep);
        else if (id == "smooth-limit")
            run_smooth_limit(config, threads, rep);
        else if (id == "reflectionless")
            run_reflectionless(config, rep);
        else if (id == "susy-check")
            run_susy(config, rep);
        else if (id == "lemma-bounds")
            run_lemma_bounds(config, threads, rep);
        else
            run_kernel_xcheck(config, threads, rep);
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    } catch (const ConvergenceError& e) {
        throw DivergenceError(e.what());
    } catch (const PvFailure& e) {
        throw DivergenceError(e.what());
    }
    rep.pass = std::all_of(rep.points.begin(), rep.points.end(), [](const PointResult& p) { return p.passed(); });
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& p : rep.points)
        log_message(2, p.label + " @ " + num(p.x_prime) + ": err " + num(p.abs_err) + (p.passed() ? "" : " FAIL"));
    log_message(1, config.experiment + (rep.pass ? ": pass" : ": FAIL"));
    return rep;
}

std::string to_json(const VerificationReport& r, bool reproducible) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["experiment"] = r.experiment;
    j["config"] = r.config_echo;
    j["pass"] = r.pass;
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : r.points)
        pts.push_back({{"label", p.label},
                       {"x_prime", p.x_prime},
                       {"expected", complex_json(p.expected)},
                       {"got", complex_json(p.got)},
                       {"abs_err", p.abs_err},
                       {"tolerance", p.tolerance},
                       {"check", kind_name(p.kind)},
                       {"pass", p.passed()}});
    auto& conv = j["convergence"] = nlohmann::ordered_json::array();
    for (const auto& row : r.convergence) conv.push_back({{"param", row.param}, {"err", row.err}});
    auto& summary = j["summary"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.summary) summary[key] = value;
    if (!reproducible) {
        j["wall_time_s"] = r.wall_time;
        const std::time_t now = std::time(nullptr);
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["generated_at"] = stamp;
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& r) {
    std::string s = "x_prime,expected_re,expected_im,got_re,got_im,abs_err\n";
    for (const auto& p : r.points)
        s += num(p.x_prime) + "," + num(p.expected.real()) + "," + num(p.expected.imag()) + "," + num(p.got.real()) +
             "," + num(p.got.imag()) + "," + num(p.abs_err) + "\n";
    return s;
}

std::string convergence_csv(const VerificationReport& r) {
    std::string s = "param,err\n";
    for (const auto& row : r.convergence) s += num(row.param) + "," + num(row.err) + "\n";
    return s;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename onto '" + path + "'");
    }
}

std::vector<std::string> emit(const VerificationReport& report, const std::string& dir, const std::string& format,
                              bool reproducible) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir + "'");
    const fs::path base = fs::path(dir) / report.experiment;
    std::vector<std::pair<std::string, std::string>> files;
    if (format == "json") {
        files.push_back({base.string() + ".json", to_json(report, reproducible)});
    } else if (format == "csv") {
        files.push_back({base.string() + ".csv", to_csv(report)});
        files.push_back({base.string() + "_convergence.csv", convergence_csv(report)});
    } else {
        throw ConfigError("format must be json or csv");
    }
    std::vector<std::string> written;
    for (const auto& [path, text] : files) {
        write_file_atomic(path, text);
        written.push_back(path);
    }
    return written;
}

int log_level() {
    const char* v = std::getenv("SINGRES_LOG");
    if (!v) return 1;
    const std::string s(v);
    if (s == "0" || s == "quiet" || s == "error") return 0;
    if (s == "2" || s == "debug") return 2;
    return 1;
}

void log_message(int level, const std::string& text) {
    if (level <= log_level()) std::cerr << "[singres] " << text << "\n";
}

}  // namespace singres
