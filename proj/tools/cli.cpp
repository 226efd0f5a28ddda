#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>

#include "singres/errors.hpp"
#include "singres/report.hpp"

namespace singres {

namespace {

struct Overrides {
    std::optional<std::string> model, z, alpha, form, phi, A, eps, order, points, params, x, k, residue_eps, grid;
    std::optional<int> draws;
    std::optional<unsigned> seed;
    std::vector<std::string> tolerances;
};

std::string describe(const PointResult& p) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "  %-26s %9.4g  err %.3e  %s", p.label.c_str(), p.x_prime, p.abs_err,
                  p.passed() ? "ok" : "FAIL");
    return buf;
}

double single(const std::string& text, const char* what) {
    const auto v = parse_list(text);
    if (v.size() != 1) throw ConfigError(std::string(what) + ": expected one number");
    return v.front();
}

void apply(const Overrides& o, ExperimentConfig& c, const std::string& sub) {
    // example1 and smooth-limit sweep the smoothing alpha; elsewhere --alpha is the model's.
    const bool alpha_is_grid = sub == "example1" || sub == "smooth-limit";
    cplx z = std::visit([](const auto& m) { return m.z; }, c.model);
    if (o.z) z = parse_coupling(*o.z);
    std::string kind = std::holds_alternative<DeltaModel>(c.model) ? "delta" : "smooth";
    if (o.model) kind = *o.model;
    if (kind == "delta") {
        c.model = DeltaModel{z};
    } else if (kind == "smooth") {
        double alpha = std::holds_alternative<SmoothModel>(c.model) ? std::get<SmoothModel>(c.model).alpha : 2.0;
        if (o.alpha && !alpha_is_grid) alpha = single(*o.alpha, "--alpha");
        c.model = SmoothModel{z, alpha};
        if (sub == "residue" && !o.A) {
            c.schedule.A_values = {30.0};
            c.eps = 1e-2;
        }
    } else {
        throw ConfigError("--model must be delta or smooth");
    }
    if (o.alpha && alpha_is_grid) c.params = parse_list(*o.alpha);
    if (o.form) {
        auto f = parse_form(*o.form);
        if (!f) throw ConfigError("unknown form '" + *o.form + "'");
        c.form = *f;
    }
    if (o.phi) c.test_function = default_test_function(*o.phi);
    if (o.A) c.schedule.A_values = parse_list(*o.A);
    if (o.eps) c.schedule.eps_values = parse_list(*o.eps);
    if (o.order) {
        auto ord = parse_order(*o.order);
        if (!ord) throw ConfigError("unknown limit order '" + *o.order + "'");
        c.schedule.order = *ord;
    }
    if (o.points) c.points = parse_list(*o.points);
    if (o.params) c.params = parse_list(*o.params);
    if (o.x) c.x = single(*o.x, "--x");
    if (o.k) c.k = single(*o.k, "--k");
    if (o.residue_eps) c.eps = single(*o.residue_eps, "--residue-eps");
    if (o.draws) c.draws = *o.draws;
    if (o.seed) c.seed = *o.seed;
    if (o.grid) {
        if (*o.grid == "default")
            c.grid_points = 5;
        else if (*o.grid == "fine")
            c.grid_points = 9;
        else
            c.grid_points = static_cast<int>(single(*o.grid, "--grid"));
    }
    for (const auto& t : o.tolerances) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError("--tol expects key=value, got '" + t + "'");
        c.tolerances[t.substr(0, eq)] = single(t.substr(eq + 1), "--tol");
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks for resolutions of the identity with a spectral singularity"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_dir, format;
    int threads = 1;
    bool reproducible = false;
    app.add_option("--config", config_path, "INI configuration file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--reproducible", reproducible, "omit timestamps and timing");

    Overrides o;
    std::map<std::string, CLI::App*> subs;
    for (const auto& id : experiment_ids()) {
        CLI::App* s = app.add_subcommand(id);
        s->add_option("--model", o.model, "delta | smooth");
        s->add_option("--z", o.z, "coupling, purely imaginary (e.g. 2i)");
        s->add_option("--alpha", o.alpha, "smoothing alpha list (example1, smooth-limit) or the model's alpha");
        s->add_option("--form", o.form, "contour | eps-split | reduced | pv | scattering | symmetric");
        s->add_option("--phi", o.phi, "test function family");
        s->add_option("--A", o.A, "cutoffs, comma separated");
        s->add_option("--eps", o.eps, "excision half-widths, comma separated");
        s->add_option("--order", o.order, "A_then_eps | eps_then_A | alpha_first");
        s->add_option("--points", o.points, "evaluation grid (x' or k')");
        s->add_option("--params", o.params, "secondary grid");
        s->add_option("--x", o.x, "first kernel argument (residue)");
        s->add_option("--k", o.k, "wavenumber (smooth-limit)");
        s->add_option("--residue-eps", o.residue_eps, "excision for the residue cross-check");
        s->add_option("--grid", o.grid, "default | fine | points per axis (lemma-bounds)");
        s->add_option("--draws", o.draws, "random draws (kernel-xcheck)");
        s->add_option("--seed", o.seed, "random seed (kernel-xcheck)");
        s->add_option("--tol", o.tolerances, "tolerance override key=value");
        subs[id] = s;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    }

    std::string sub;
    for (const auto& [id, s] : subs)
        if (s->parsed()) sub = id;

    try {
        ExperimentConfig c = config_path.empty() ? default_config(sub) : load_config(config_path, sub);
        if (c.experiment != sub)
            throw ConfigError("config file is for '" + c.experiment + "', not '" + sub + "'");
        apply(o, c, sub);
        if (!out_dir.empty()) c.out_dir = out_dir;
        if (!format.empty()) c.format = format;
        c.validate();

        const VerificationReport rep = run(c, threads);
        for (const auto& p : rep.points) out << describe(p) << "\n";
        for (const auto& path : emit(rep, c.out_dir, c.format, reproducible)) out << "wrote " << path << "\n";
        out << sub << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
        return rep.pass ? exit_ok : exit_check_failed;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const ParameterError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const ClassViolation& e) {
        err << "class violation: " << e.what() << "\n";
        return exit_class;
    } catch (const DivergenceError& e) {
        err << "divergence: " << e.what() << "\n";
        return exit_divergence;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return exit_io;
    } catch (const Error& e) {
        // domain and pole errors come from parameters outside a model's range
        err << "config error: " << e.what() << "\n";
        return exit_config;
    }
}

}  // namespace singres
