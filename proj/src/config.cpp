#include "degvisc/config.hpp"

#include "degvisc/diagnostics.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/presets.hpp"
#include "degvisc/snapshot.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace degvisc {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    const std::string v = trim(text);
    T out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw ConfigError("key " + key + ": cannot parse '" + text + "' as a number");
    return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
    const std::string v = trim(text);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("key " + key + ": expected a boolean, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        out.push_back(parse_number<double>(key, item));
    }
    return out;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

struct Entry {
    const char* section;
    const char* key;
    std::function<void(RunConfig&, const std::string& key, const std::string& value)> set;
    std::function<std::string(const RunConfig&)> get;
};

template <class T>
Entry number(const char* section, const char* key, T RunConfig::*field) {
    return {section, key,
            [field](RunConfig& c, const std::string& k, const std::string& v) { c.*field = parse_number<T>(k, v); },
            [field](const RunConfig& c) {
                if constexpr (std::is_floating_point_v<T>) return fmt17(c.*field);
                else return std::to_string(c.*field);
            }};
}

Entry flag(const char* section, const char* key, bool RunConfig::*field) {
    return {section, key, [field](RunConfig& c, const std::string& k, const std::string& v) { c.*field = parse_bool(k, v); },
            [field](const RunConfig& c) { return fmt_bool(c.*field); }};
}

Entry text(const char* section, const char* key, std::string RunConfig::*field) {
    return {section, key, [field](RunConfig& c, const std::string&, const std::string& v) { c.*field = trim(v); },
            [field](const RunConfig& c) { return c.*field; }};
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table{
        {"model", "variant", [](RunConfig& c, const std::string&, const std::string& v) { c.variant = parse_variant(trim(v)); },
         [](const RunConfig& c) { return to_string(c.variant); }},
        number("model", "alpha", &RunConfig::alpha),
        number("model", "gamma", &RunConfig::gamma),
        number("model", "epsilon", &RunConfig::epsilon),
        number("model", "eta0", &RunConfig::eta0),
        number("model", "p0", &RunConfig::p0),
        {"model", "sigma0",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (trim(v).empty() || trim(v) == "paper") c.sigma0.reset();
             else c.sigma0 = parse_number<double>(k, v);
         },
         [](const RunConfig& c) { return c.sigma0 ? fmt17(*c.sigma0) : std::string("paper"); }},
        number("grid", "dim", &RunConfig::dim),
        number("grid", "n", &RunConfig::n),
        {"grid", "topology",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             const std::string t = trim(v);
             if (t == "periodic") c.topology = Topology::Periodic;
             else if (t == "box") c.topology = Topology::Box;
             else throw ConfigError("key " + k + ": expected periodic or box, got '" + t + "'");
         },
         [](const RunConfig& c) { return std::string(c.topology == Topology::Box ? "box" : "periodic"); }},
        number("grid", "length", &RunConfig::length),
        number("grid", "half_width", &RunConfig::half_width),
        text("data", "preset", &RunConfig::preset),
        text("data", "raw_rho", &RunConfig::raw_rho),
        text("data", "raw_m", &RunConfig::raw_m),
        number("data", "seed", &RunConfig::seed),
        {"data", "initial_data",
         [](RunConfig& c, const std::string&, const std::string& v) { c.init = parse_initial_data_mode(trim(v)); },
         [](const RunConfig& c) { return to_string(c.init); }},
        number("data", "nu", &RunConfig::nu),
        number("run", "t_end", &RunConfig::t_end),
        number("run", "cfl", &RunConfig::cfl),
        {"run", "scheme", [](RunConfig& c, const std::string&, const std::string& v) { c.scheme = parse_scheme(trim(v)); },
         [](const RunConfig& c) { return to_string(c.scheme); }},
        number("run", "dt", &RunConfig::dt),
        number("run", "record_stride", &RunConfig::record_stride),
        number("run", "snapshot_stride", &RunConfig::snapshot_stride),
        number("run", "sync_interval", &RunConfig::sync_interval),
        number("run", "max_steps", &RunConfig::max_steps),
        number("run", "floor_fraction", &RunConfig::floor_fraction),
        flag("run", "disable_source", &RunConfig::disable_source),
        number("diagnostics", "level_points", &RunConfig::level_points),
        number("diagnostics", "c_tol", &RunConfig::c_tol),
        flag("weakform", "residuals", &RunConfig::residuals),
        number("weakform", "test_modes", &RunConfig::test_modes),
        {"sweep", "eps_list",
         [](RunConfig& c, const std::string& k, const std::string& v) { c.eps_list = parse_list(k, v); },
         [](const RunConfig& c) {
             std::string s;
             for (std::size_t i = 0; i < c.eps_list.size(); ++i) s += (i ? ", " : "") + fmt17(c.eps_list[i]);
             return s;
         }},
        flag("sweep", "refine", &RunConfig::refine),
        number("sweep", "sync_points", &RunConfig::sync_points),
        flag("sweep", "parallel", &RunConfig::parallel),
        text("output", "dir", &RunConfig::out_dir),
    };
    return table;
}

void validate(const RunConfig& c) {
    auto need = [](bool ok, const std::string& msg) {
        if (!ok) throw ConfigError(msg);
    };
    need(c.dim >= 1 && c.dim <= 3, "grid.dim must be 1, 2 or 3");
    need(c.n >= 4, "grid.n must be at least 4");
    need(c.length > 0.0 && std::isfinite(c.length), "grid.length must be positive");
    need(c.half_width > 0.0 && std::isfinite(c.half_width), "grid.half_width must be positive");
    need(c.epsilon >= 0.0 && std::isfinite(c.epsilon), "model.epsilon must be finite and non-negative");
    need(c.eta0 > 0.0, "model.eta0 must be positive");
    need(c.p0 >= 1, "model.p0 must be positive");
    need(!c.sigma0 || *c.sigma0 >= 0.0, "model.sigma0 must be non-negative");
    need(c.nu >= 0, "data.nu must be non-negative (0 selects the default)");
    need(c.t_end > 0.0 && std::isfinite(c.t_end), "run.t_end must be positive");
    need(c.cfl > 0.0 && c.cfl <= 1.0, "run.cfl must lie in (0, 1]");
    need(c.dt >= 0.0, "run.dt must be non-negative (0 selects the adaptive step)");
    need(c.record_stride >= 1, "run.record_stride must be at least 1");
    need(c.snapshot_stride >= 0, "run.snapshot_stride must be non-negative");
    need(c.sync_interval >= 0.0, "run.sync_interval must be non-negative");
    need(c.max_steps >= 1, "run.max_steps must be positive");
    need(c.floor_fraction >= 0.0 && c.floor_fraction < 1.0, "run.floor_fraction must lie in [0, 1)");
    need(c.level_points >= 2, "diagnostics.level_points must be at least 2");
    need(c.c_tol > 0.0, "diagnostics.c_tol must be positive");
    need(c.test_modes >= 1, "weakform.test_modes must be at least 1");
    need(c.sync_points >= 2, "sweep.sync_points must be at least 2");
    need(!c.out_dir.empty(), "output.dir must not be empty");
    if (c.raw_rho.empty()) {
        const auto& names = preset_names();
        need(std::find(names.begin(), names.end(), c.preset) != names.end(), "unknown preset '" + c.preset + "'");
    } else {
        need(!c.refine, "sweep.refine needs a preset (raw files cannot be resampled)");
    }
    need(c.raw_m.empty() || !c.raw_rho.empty(), "data.raw_m given without data.raw_rho");
    for (double e : c.eps_list) need(e >= 0.0 && std::isfinite(e), "sweep.eps_list entries must be non-negative");
    (void)c.params();  // regime check
}

}  // namespace

ModelParams RunConfig::params() const {
    ModelParams p = make_params(alpha, gamma, epsilon, eta0, variant, dim);
    p.p0 = p0;
    if (sigma0) p.sigma0 = *sigma0;
    return p;
}

Grid RunConfig::grid() const {
    return topology == Topology::Periodic ? Grid::torus(dim, n, length) : Grid::box(dim, n, half_width);
}

RawData RunConfig::raw_on(const Grid& g) const {
    if (raw_rho.empty()) return degvisc::preset(preset, g, seed);
    const FieldSnapshot r = read_field(raw_rho);
    if (r.is_vector) throw ConfigError("data.raw_rho must hold a scalar field");
    if (!(r.grid == g)) throw ConfigError("data.raw_rho grid does not match the [grid] section");
    RawData out{r.scalar, VectorField(g)};
    if (!raw_m.empty()) {
        const FieldSnapshot m = read_field(raw_m);
        if (!m.is_vector || !(m.grid == g)) throw ConfigError("data.raw_m must be a vector field on the run grid");
        out.m0 = m.vector;
    }
    return out;
}

RawData RunConfig::raw() const { return raw_on(grid()); }

RunControls RunConfig::controls(const ScalarField& rho0) const {
    RunControls c;
    c.cfl = cfl;
    c.scheme = scheme;
    c.dt_override = dt;
    c.record_stride = record_stride;
    c.snapshot_stride = snapshot_stride;
    c.sync_interval = sync_interval;
    c.max_steps = max_steps;
    c.floor_fraction = floor_fraction;
    c.rhs.disable_source = disable_source;
    c.levels = default_levels(rho0, level_points);
    return c;
}

SequenceOptions RunConfig::sequence_options(const ScalarField& rho0) const {
    SequenceOptions o;
    o.controls = controls(rho0);
    o.t_end = t_end;
    o.init = init;
    o.nu = nu;
    o.refine = refine;
    o.sync_points = sync_points;
    o.residuals = residuals;
    o.test_modes = test_modes;
    o.parallel = parallel;
    return o;
}

RunConfig parse_config(const std::string& text, bool strict, std::vector<std::string>* warnings) {
    boost::property_tree::ptree tree;
    std::istringstream in(text);
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(std::string("config syntax: ") + e.what());
    }
    RunConfig c;
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty()) {
            const std::string msg = "key '" + section + "' outside any section";
            if (strict) throw ConfigError(msg);
            if (warnings) warnings->push_back(msg + " ignored");
            continue;
        }
        for (const auto& [key, value] : body) {
            const std::string full = section + "." + key;
            const auto& table = entries();
            const auto it = std::find_if(table.begin(), table.end(),
                                         [&](const Entry& e) { return section == e.section && key == e.key; });
            if (it == table.end()) {
                if (strict) throw ConfigError("unknown key " + full);
                if (warnings) warnings->push_back("unknown key " + full + " ignored");
                continue;
            }
            it->set(c, full, value.data());
        }
    }
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path, bool strict, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), strict, warnings);
}

std::string to_ini(const RunConfig& c) {
    std::ostringstream out;
    std::string section;
    for (const auto& e : entries()) {
        if (section != e.section) {
            if (!section.empty()) out << '\n';
            section = e.section;
            out << '[' << section << "]\n";
        }
        out << e.key << " = " << e.get(c) << '\n';
    }
    return out.str();
}

}  // namespace degvisc
