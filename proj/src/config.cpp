#include "singres/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "singres/errors.hpp"

namespace singres {

namespace pt = boost::property_tree;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": not a number: '" + text + "'");
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<double> range(double lo, double hi, double step) {
    std::vector<double> v;
    for (int i = 0; lo + i * step <= hi + 1e-9; ++i) v.push_back(lo + i * step);
    return v;
}

// Read a family parameter, keeping the default when absent.
void read_param(const pt::ptree& t, const char* key, double& into) {
    if (auto v = t.get_optional<std::string>(key)) into = parse_double(trim(*v), std::string("test_function.") + key);
}

}  // namespace

const std::vector<std::string>& experiment_ids() {
    static const std::vector<std::string> ids{"verify-identity", "biorthogonality", "example1",     "half-mass",
                                              "residue",         "smooth-limit",    "reflectionless", "susy-check",
                                              "lemma-bounds",    "kernel-xcheck"};
    return ids;
}

cplx parse_complex(const std::string& raw) {
    const std::string text = trim(raw);
    static const std::regex real_only(R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))");
    static const std::regex imag_only(R"(([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)");
    static const std::regex both(
        R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)([+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)");
    std::smatch m;
    auto coeff = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return std::stod(s);
    };
    try {
        if (std::regex_match(text, m, real_only)) return {std::stod(m[1]), 0.0};
        if (std::regex_match(text, m, imag_only)) return {0.0, coeff(m[1])};
        if (std::regex_match(text, m, both)) return {std::stod(m[1]), coeff(m[2])};
    } catch (const std::logic_error&) {
    }
    throw ConfigError("not a complex number (expected a+bi): '" + raw + "'");
}

std::string format_complex(cplx v) {
    std::string im = num(v.imag());
    if (im[0] != '-') im = "+" + im;
    return num(v.real()) + im + "i";
}

cplx parse_coupling(const std::string& text) {
    const cplx z = parse_complex(text);
    if (z.real() != 0.0)
        throw ConfigError("z = " + trim(text) +
                          ": the model assumes a purely imaginary coupling (nonzero real part rejected)");
    if (z.imag() == 0.0) throw ConfigError("z must be nonzero");
    return z;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) v.push_back(parse_double(item, "list"));
    }
    return v;
}

std::string format_list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
    return s;
}

TestFunctionSpec default_test_function(const std::string& family) {
    if (family == "gaussian") return {Gaussian{}, {}};
    if (family == "bump") return {Bump{}, {}};
    if (family == "power_decay") return {PowerDecay{}, {}};
    if (family == "slow_increase") return {SlowIncrease{}, {}};
    if (family == "smoothed_psi0") return {SmoothedPsi0{}, {}};
    if (family == "singular_psi0") return {SingularPsi0{}, {}};
    if (family == "plane_wave_packet") return {PlaneWavePacket{}, {}};
    throw ConfigError("unknown test function family '" + family + "'");
}

void ExperimentConfig::validate() const {
    bool known = false;
    for (const auto& id : experiment_ids()) known = known || id == experiment;
    if (!known) throw ConfigError("unknown experiment '" + experiment + "'");
    if (format != "json" && format != "csv") throw ConfigError("format must be json or csv");
    for (const auto& [key, tol] : tolerances)
        if (!(tol > 0.0)) throw ConfigError("tolerance '" + key + "' must be positive");
    const bool needs_points = experiment == "verify-identity" || experiment == "biorthogonality" ||
                              experiment == "example1" || experiment == "half-mass" || experiment == "residue" ||
                              experiment == "susy-check";
    if (needs_points && points.empty()) throw ConfigError(experiment + ": empty point grid");
    const bool needs_params = experiment == "example1" || experiment == "smooth-limit" || experiment == "reflectionless";
    if (needs_params && params.empty()) throw ConfigError(experiment + ": empty parameter grid");
    if (experiment == "smooth-limit" && params.size() < 2) throw ConfigError("smooth-limit: need at least two alphas");
    if (grid_points < 2) throw ConfigError("lemma-bounds: need at least 2 grid points per axis");
    if (draws < 1) throw ConfigError("kernel-xcheck: draws must be positive");
    try {
        schedule.validate();
        singres::validate(test_function);
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
}

double ExperimentConfig::tolerance(const std::string& key) const {
    auto it = tolerances.find(key);
    if (it == tolerances.end()) throw ConfigError(experiment + ": no tolerance '" + key + "'");
    return it->second;
}

ExperimentConfig default_config(const std::string& experiment) {
    ExperimentConfig c;
    c.experiment = experiment;
    if (experiment == "verify-identity") {
        c.points = range(-2.0, 2.0, 0.5);
        c.tolerances = {{"abs", 1e-3}};
    } else if (experiment == "biorthogonality") {
        c.points = {0.5, 1.5, 1.0};
        c.schedule.A_values = {400.0};
        c.tolerances = {{"abs", 1e-2}};
    } else if (experiment == "example1") {
        c.points = {0.8};
        c.params = {0.5, 0.25};
        c.schedule.A_values = {500.0, 1000.0, 2000.0};
        c.tolerances = {{"split", 1e-4}, {"alpha_first", 1e-2}};
    } else if (experiment == "half-mass") {
        c.test_function = {SingularPsi0{}, {}};
        c.form = ResolutionForm::principal_value;
        c.points = {-1.0, 0.5, 1.0};
        c.schedule.A_values = {200.0};
        c.tolerances = {{"half", 2e-2}, {"sum", 1e-2}};
    } else if (experiment == "residue") {
        c.points = {-0.7, 0.5, 1.2};
        c.schedule.A_values = {400.0};
        c.tolerances = {{"delta", 1e-5}, {"smooth", 1e-4}};
    } else if (experiment == "smooth-limit") {
        c.model = SmoothModel{};
        c.params = {10.0, 20.0, 40.0};
        c.tolerances = {{"ratio", 0.2}};
    } else if (experiment == "reflectionless") {
        c.model = SmoothModel{};
        c.params = {0.5, 1.0, 2.0};
        c.tolerances = {{"zero", 1e-10}, {"perturbed", 1e-3}, {"perturbation", 1e-2}};
    } else if (experiment == "susy-check") {
        c.model = SmoothModel{};
        c.points = range(-3.0, 3.0, 0.5);
        c.tolerances = {{"abs", 1e-10}};
    } else if (experiment == "lemma-bounds") {
        c.tolerances = {{"margin", 1.01}};
    } else if (experiment == "kernel-xcheck") {
        c.schedule.A_values = {20.0, 50.0};
        c.tolerances = {{"abs", 1e-8}};
    } else {
        throw ConfigError("unknown experiment '" + experiment + "'");
    }
    return c;
}

ExperimentConfig parse_config(const std::string& ini_text, const std::string& experiment) {
    pt::ptree tree;
    try {
        std::istringstream in(ini_text);
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    auto get = [&](const char* key) { return tree.get_optional<std::string>(key); };

    ExperimentConfig c = default_config(trim(get("experiment.id").value_or(experiment)));

    const std::string kind = get("model.kind").value_or(std::holds_alternative<DeltaModel>(c.model) ? "delta" : "smooth");
    cplx z = std::visit([](const auto& m) { return m.z; }, c.model);
    if (auto v = get("model.z")) z = parse_coupling(*v);
    if (kind == "delta") {
        c.model = DeltaModel{z};
    } else if (kind == "smooth") {
        double alpha = std::holds_alternative<SmoothModel>(c.model) ? std::get<SmoothModel>(c.model).alpha : 2.0;
        if (auto v = get("model.alpha")) alpha = parse_double(trim(*v), "model.alpha");
        if (!(alpha > 0.0)) throw ConfigError("model.alpha must be positive");
        c.model = SmoothModel{z, alpha};
    } else {
        throw ConfigError("model.kind must be delta or smooth, got '" + kind + "'");
    }

    if (auto v = get("form.name")) {
        auto f = parse_form(trim(*v));
        if (!f) throw ConfigError("unknown form '" + *v + "'");
        c.form = *f;
    }

    if (auto fam = tree.get_child_optional("test_function")) {
        const pt::ptree& t = *fam;
        if (auto name = t.get_optional<std::string>("family")) c.test_function = default_test_function(trim(*name));
        std::visit(overloaded{
                       [&](Gaussian& g) { read_param(t, "sigma", g.sigma), read_param(t, "center", g.center); },
                       [&](Bump& b) { read_param(t, "lo", b.lo), read_param(t, "hi", b.hi); },
                       [&](PowerDecay& p) { read_param(t, "p", p.p); },
                       [&](SlowIncrease& s) {
                           double sign = s.sign;
                           read_param(t, "sign", sign);
                           if (sign != 1.0 && sign != -1.0) throw ConfigError("test_function.sign must be 1 or -1");
                           s.sign = static_cast<int>(sign);
                           read_param(t, "k0", s.k0), read_param(t, "kappa", s.kappa);
                       },
                       [&](SmoothedPsi0& s) {
                           read_param(t, "alpha", s.alpha);
                           if (auto v = t.get_optional<std::string>("z")) s.z = parse_coupling(*v);
                       },
                       [&](SingularPsi0& s) {
                           if (auto v = t.get_optional<std::string>("z")) s.z = parse_coupling(*v);
                       },
                       [&](PlaneWavePacket& p) { read_param(t, "k0", p.k0), read_param(t, "width", p.width); },
                   },
                   c.test_function.family);
        if (auto g = t.get_optional<std::string>("claimed_gamma"))
            c.test_function.claimed_gamma = parse_double(trim(*g), "test_function.claimed_gamma");
    }

    if (auto v = get("spectral.center")) c.spectral.center = parse_double(trim(*v), "spectral.center");
    if (auto v = get("spectral.width")) c.spectral.width = parse_double(trim(*v), "spectral.width");

    LimitSchedule& s = c.schedule;
    if (auto v = get("schedule.A")) s.A_values = parse_list(*v);
    if (auto v = get("schedule.eps")) s.eps_values = parse_list(*v);
    if (auto v = get("schedule.delta")) s.delta_values = parse_list(*v);
    if (auto v = get("schedule.alpha")) s.alpha_values = parse_list(*v);
    if (auto v = get("schedule.X")) s.X_truncation = parse_double(trim(*v), "schedule.X");
    if (auto v = get("schedule.order")) {
        auto o = parse_order(trim(*v));
        if (!o) throw ConfigError("unknown limit order '" + *v + "'");
        s.order = *o;
    }

    if (auto v = get("grid.points")) c.points = parse_list(*v);
    if (auto v = get("grid.params")) c.params = parse_list(*v);
    if (auto v = get("grid.x")) c.x = parse_double(trim(*v), "grid.x");
    if (auto v = get("grid.k")) c.k = parse_double(trim(*v), "grid.k");
    if (auto v = get("grid.eps")) c.eps = parse_double(trim(*v), "grid.eps");
    if (auto v = get("grid.draws")) c.draws = static_cast<int>(parse_double(trim(*v), "grid.draws"));
    if (auto v = get("grid.seed")) c.seed = static_cast<unsigned>(parse_double(trim(*v), "grid.seed"));
    if (auto v = get("grid.n")) c.grid_points = static_cast<int>(parse_double(trim(*v), "grid.n"));

    if (auto tol = tree.get_child_optional("tolerance"))
        for (const auto& [key, node] : *tol) c.tolerances[key] = parse_double(trim(node.data()), "tolerance." + key);

    if (auto v = get("output.dir")) c.out_dir = trim(*v);
    if (auto v = get("output.format")) c.format = trim(*v);

    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string& path, const std::string& experiment) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), experiment);
}

std::string to_ini(const ExperimentConfig& c) {
    pt::ptree tree;
    tree.put("experiment.id", c.experiment);
    std::visit(overloaded{
                   [&](const DeltaModel& m) {
                       tree.put("model.kind", "delta");
                       tree.put("model.z", format_complex(m.z));
                   },
                   [&](const SmoothModel& m) {
                       tree.put("model.kind", "smooth");
                       tree.put("model.z", format_complex(m.z));
                       tree.put("model.alpha", num(m.alpha));
                   },
               },
               c.model);
    tree.put("form.name", form_name(c.form));

    tree.put("test_function.family", family_name(c.test_function));
    std::visit(overloaded{
                   [&](const Gaussian& g) {
                       tree.put("test_function.sigma", num(g.sigma));
                       tree.put("test_function.center", num(g.center));
                   },
                   [&](const Bump& b) {
                       tree.put("test_function.lo", num(b.lo));
                       tree.put("test_function.hi", num(b.hi));
                   },
                   [&](const PowerDecay& p) { tree.put("test_function.p", num(p.p)); },
                   [&](const SlowIncrease& s) {
                       tree.put("test_function.sign", std::to_string(s.sign));
                       tree.put("test_function.k0", num(s.k0));
                       tree.put("test_function.kappa", num(s.kappa));
                   },
                   [&](const SmoothedPsi0& s) {
                       tree.put("test_function.alpha", num(s.alpha));
                       tree.put("test_function.z", format_complex(s.z));
                   },
                   [&](const SingularPsi0& s) { tree.put("test_function.z", format_complex(s.z)); },
                   [&](const PlaneWavePacket& p) {
                       tree.put("test_function.k0", num(p.k0));
                       tree.put("test_function.width", num(p.width));
                   },
               },
               c.test_function.family);
    if (c.test_function.claimed_gamma) tree.put("test_function.claimed_gamma", num(*c.test_function.claimed_gamma));

    tree.put("spectral.center", num(c.spectral.center));
    tree.put("spectral.width", num(c.spectral.width));

    tree.put("schedule.A", format_list(c.schedule.A_values));
    tree.put("schedule.eps", format_list(c.schedule.eps_values));
    tree.put("schedule.order", order_name(c.schedule.order));
    tree.put("schedule.delta", format_list(c.schedule.delta_values));
    tree.put("schedule.alpha", format_list(c.schedule.alpha_values));
    tree.put("schedule.X", num(c.schedule.X_truncation));

    tree.put("grid.points", format_list(c.points));
    tree.put("grid.params", format_list(c.params));
    tree.put("grid.x", num(c.x));
    tree.put("grid.k", num(c.k));
    tree.put("grid.eps", num(c.eps));
    tree.put("grid.draws", std::to_string(c.draws));
    tree.put("grid.seed", std::to_string(c.seed));
    tree.put("grid.n", std::to_string(c.grid_points));

    for (const auto& [key, tol] : c.tolerances) tree.put(pt::ptree::path_type("tolerance|" + key, '|'), num(tol));

    tree.put("output.dir", c.out_dir);
    tree.put("output.format", c.format);

    std::ostringstream out;
    pt::write_ini(out, tree);
    return out.str();
}

}  // namespace singres
