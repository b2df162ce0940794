#include "velab/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "velab/error.hpp"
#include "velab/grid.hpp"

namespace velab {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Entry {
    std::string value;
    int line;
};

[[noreturn]] void bad(const std::string& key, int line, const std::string& why) {
    throw ValidationError("config line " + std::to_string(line) + ": " + key + ": " + why);
}

double to_double(const std::string& key, const Entry& e) {
    const char* s = e.value.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || errno == ERANGE) bad(key, e.line, "expected a number, got '" + e.value + "'");
    return v;
}

int to_int(const std::string& key, const Entry& e) {
    const char* s = e.value.c_str();
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || errno == ERANGE || v < -2147483647L || v > 2147483647L)
        bad(key, e.line, "expected an integer, got '" + e.value + "'");
    return static_cast<int>(v);
}

bool to_bool(const std::string& key, const Entry& e) {
    const std::string& v = e.value;
    if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "off" || v == "no" || v == "0") return false;
    bad(key, e.line, "expected true/false, got '" + v + "'");
}

std::vector<std::string> split_list(const Entry& e) {
    std::vector<std::string> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

using Section = std::map<std::string, Entry>;

const std::map<std::string, std::set<std::string>>& schema() {
    static const std::map<std::string, std::set<std::string>> s{
        {"grid", {"nx", "ny", "lx", "ly"}},
        {"physics", {"gamma", "mu", "lambda", "eps", "elastic_coupling", "filter_kappa"}},
        {"init",
         {"amplitude", "kx", "y_center", "y_width", "b_ratio", "velocity", "velocity_amplitude", "velocity_width"}},
        {"run",
         {"t_end", "cfl", "sample_interval", "snapshot_interval", "m", "z0_depth", "mode", "ideal_slip",
          "sponge_sigma", "sponge_fraction"}},
        {"sweep", {"eps_list", "mode"}},
        {"mms", {"resolutions", "t_end", "amplitude", "ly", "cfl"}},
    };
    return s;
}

// Applies a validation step, prefixing the failing section.
template <class F>
void check(const std::string& section, F&& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        throw ValidationError(section + ": " + e.what());
    }
}

}  // namespace

BcMode Config::run_mode() const {
    if (run.mode == "auto") return physics.eps == 0.0 ? BcMode::ideal : BcMode::viscous;
    return parse_bc_mode(run.mode);
}

BoundaryOptions Config::boundary() const {
    BoundaryOptions b;
    b.ideal_slip = run.ideal_slip;
    b.sigma_sponge = run.sponge_sigma;
    b.sponge_fraction = run.sponge_fraction;
    return b;
}

SweepPlan Config::sweep_plan() const {
    SweepPlan p;
    p.eps_list = sweep.eps_list;
    p.nx = grid.nx;
    p.ny = grid.ny;
    p.lx = grid.lx;
    p.ly = grid.ly;
    p.params = physics;
    p.params.elastic_coupling = sweep.mode == "elastic";
    p.init = init;
    p.t_end = run.t_end;
    p.cfl = run.cfl;
    p.sample_interval = run.sample_interval;
    p.m = run.m;
    p.z0_depth = run.z0_depth;
    p.bc = boundary();
    return p;
}

Config parse_config(std::string_view text) {
    std::map<std::string, Section> doc;
    std::string current;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ValidationError("config line " + std::to_string(line) + ": unterminated section header");
            current = trim(s.substr(1, s.size() - 2));
            if (!schema().count(current))
                throw ValidationError("config line " + std::to_string(line) + ": unknown section [" + current + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(line) + ": expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ValidationError("config line " + std::to_string(line) + ": missing key");
        if (current.empty())
            throw ValidationError("config line " + std::to_string(line) + ": key '" + key + "' outside a section");
        if (!schema().at(current).count(key))
            throw ValidationError("config line " + std::to_string(line) + ": unknown key '" + key + "' in [" + current + "]");
        if (value.empty()) bad(key, line, "missing value");
        if (!doc[current].emplace(key, Entry{value, line}).second) bad(key, line, "duplicate key");
    }

    Config c;
    auto each = [&](const std::string& sec, auto&& fn) {
        for (const auto& [k, e] : doc[sec]) fn(k, e);
    };
    each("grid", [&](const std::string& k, const Entry& e) {
        if (k == "nx") c.grid.nx = to_int(k, e);
        else if (k == "ny") c.grid.ny = to_int(k, e);
        else if (k == "lx") c.grid.lx = to_double(k, e);
        else c.grid.ly = to_double(k, e);
    });
    each("physics", [&](const std::string& k, const Entry& e) {
        if (k == "gamma") c.physics.gamma = to_double(k, e);
        else if (k == "mu") c.physics.mu = to_double(k, e);
        else if (k == "lambda") c.physics.lambda = to_double(k, e);
        else if (k == "eps") c.physics.eps = to_double(k, e);
        else if (k == "elastic_coupling") c.physics.elastic_coupling = to_bool(k, e);
        else c.physics.filter_kappa = to_double(k, e);
    });
    each("init", [&](const std::string& k, const Entry& e) {
        if (k == "amplitude") c.init.amplitude = to_double(k, e);
        else if (k == "kx") c.init.kx = to_int(k, e);
        else if (k == "y_center") c.init.y_center = to_double(k, e);
        else if (k == "y_width") c.init.y_width = to_double(k, e);
        else if (k == "b_ratio") c.init.b_ratio = to_double(k, e);
        else if (k == "velocity") {
            try {
                c.init.velocity = parse_velocity_init(e.value);
            } catch (const ValidationError& ex) {
                bad(k, e.line, ex.what());
            }
        } else if (k == "velocity_amplitude") c.init.velocity_amplitude = to_double(k, e);
        else c.init.velocity_width = to_double(k, e);
    });
    each("run", [&](const std::string& k, const Entry& e) {
        if (k == "t_end") c.run.t_end = to_double(k, e);
        else if (k == "cfl") c.run.cfl = to_double(k, e);
        else if (k == "sample_interval") c.run.sample_interval = to_int(k, e);
        else if (k == "snapshot_interval") c.run.snapshot_interval = to_int(k, e);
        else if (k == "m") c.run.m = to_int(k, e);
        else if (k == "z0_depth") c.run.z0_depth = to_int(k, e);
        else if (k == "mode") {
            if (e.value != "auto") {
                try {
                    parse_bc_mode(e.value);
                } catch (const ValidationError& ex) {
                    bad(k, e.line, ex.what());
                }
            }
            c.run.mode = e.value;
        } else if (k == "ideal_slip") c.run.ideal_slip = to_bool(k, e);
        else if (k == "sponge_sigma") c.run.sponge_sigma = to_double(k, e);
        else c.run.sponge_fraction = to_double(k, e);
    });
    each("sweep", [&](const std::string& k, const Entry& e) {
        if (k == "eps_list") {
            c.sweep.eps_list.clear();
            for (const auto& item : split_list(e)) c.sweep.eps_list.push_back(to_double(k, Entry{item, e.line}));
        } else {
            if (e.value != "elastic" && e.value != "fluid") bad(k, e.line, "expected elastic or fluid");
            c.sweep.mode = e.value;
        }
    });
    each("mms", [&](const std::string& k, const Entry& e) {
        if (k == "resolutions") {
            c.mms.resolutions.clear();
            for (const auto& item : split_list(e)) c.mms.resolutions.push_back(to_int(k, Entry{item, e.line}));
        } else if (k == "t_end") c.mms.t_end = to_double(k, e);
        else if (k == "amplitude") c.mms.amplitude = to_double(k, e);
        else if (k == "ly") c.mms.ly = to_double(k, e);
        else c.mms.cfl = to_double(k, e);
    });

    check("grid", [&] { build_grid(c.grid.nx, c.grid.ny, c.grid.lx, c.grid.ly); });
    check("physics", [&] { c.physics.validate(); });
    check("init", [&] { c.init.validate(); });
    check("run", [&] {
        if (!(c.run.t_end >= 0.0)) throw ValidationError("t_end must be >= 0");
        if (!(c.run.cfl > 0.0 && c.run.cfl <= 1.0)) throw ValidationError("cfl must lie in (0, 1]");
        if (c.run.sample_interval < 1) throw ValidationError("sample_interval must be >= 1");
        if (c.run.snapshot_interval < 0) throw ValidationError("snapshot_interval must be >= 0");
        if (c.run.m < 0 || c.run.m > 2) throw ValidationError("m must be in 0..2");
        if (c.run.z0_depth < 1 || c.run.z0_depth > 3) throw ValidationError("z0_depth must be in 1..3");
        if (c.run.z0_depth < c.run.m) throw ValidationError("z0_depth must be >= m");
        if (!(c.run.sponge_sigma >= 0.0)) throw ValidationError("sponge_sigma must be >= 0");
        if (!(c.run.sponge_fraction >= 0.0 && c.run.sponge_fraction < 1.0))
            throw ValidationError("sponge_fraction must lie in [0, 1)");
    });
    check("sweep", [&] {
        SweepPlan p = c.sweep_plan();
        if (p.t_end == 0.0) p.t_end = 1.0;
        p.validate();
    });
    check("mms", [&] {
        if (c.mms.resolutions.size() < 2) throw ValidationError("resolutions needs at least two entries");
        for (std::size_t k = 0; k < c.mms.resolutions.size(); ++k) {
            if (c.mms.resolutions[k] < 8) throw ValidationError("resolutions must be >= 8");
            if (k > 0 && c.mms.resolutions[k] <= c.mms.resolutions[k - 1])
                throw ValidationError("resolutions must be strictly increasing");
        }
        if (!(c.mms.t_end > 0.0)) throw ValidationError("t_end must be positive");
        if (!(c.mms.ly > 0.0)) throw ValidationError("ly must be positive");
        if (!(c.mms.cfl > 0.0 && c.mms.cfl <= 1.0)) throw ValidationError("cfl must lie in (0, 1]");
    });
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string format_config(const Config& c) {
    std::ostringstream o;
    auto b = [](bool v) { return v ? "true" : "false"; };
    o << "[grid]\nnx = " << c.grid.nx << "\nny = " << c.grid.ny << "\nlx = " << fmt(c.grid.lx) << "\nly = " << fmt(c.grid.ly)
      << "\n\n[physics]\ngamma = " << fmt(c.physics.gamma) << "\nmu = " << fmt(c.physics.mu)
      << "\nlambda = " << fmt(c.physics.lambda) << "\neps = " << fmt(c.physics.eps)
      << "\nelastic_coupling = " << b(c.physics.elastic_coupling) << "\nfilter_kappa = " << fmt(c.physics.filter_kappa)
      << "\n\n[init]\namplitude = " << fmt(c.init.amplitude) << "\nkx = " << c.init.kx
      << "\ny_center = " << fmt(c.init.y_center) << "\ny_width = " << fmt(c.init.y_width)
      << "\nb_ratio = " << fmt(c.init.b_ratio) << "\nvelocity = " << velocity_init_name(c.init.velocity)
      << "\nvelocity_amplitude = " << fmt(c.init.velocity_amplitude) << "\nvelocity_width = " << fmt(c.init.velocity_width)
      << "\n\n[run]\nt_end = " << fmt(c.run.t_end) << "\ncfl = " << fmt(c.run.cfl)
      << "\nsample_interval = " << c.run.sample_interval << "\nsnapshot_interval = " << c.run.snapshot_interval
      << "\nm = " << c.run.m << "\nz0_depth = " << c.run.z0_depth << "\nmode = " << c.run.mode
      << "\nideal_slip = " << b(c.run.ideal_slip) << "\nsponge_sigma = " << fmt(c.run.sponge_sigma)
      << "\nsponge_fraction = " << fmt(c.run.sponge_fraction) << "\n\n[sweep]\neps_list = ";
    for (std::size_t k = 0; k < c.sweep.eps_list.size(); ++k) o << (k ? ", " : "") << fmt(c.sweep.eps_list[k]);
    o << "\nmode = " << c.sweep.mode << "\n\n[mms]\nresolutions = ";
    for (std::size_t k = 0; k < c.mms.resolutions.size(); ++k) o << (k ? ", " : "") << c.mms.resolutions[k];
    o << "\nt_end = " << fmt(c.mms.t_end) << "\namplitude = " << fmt(c.mms.amplitude) << "\nly = " << fmt(c.mms.ly)
      << "\ncfl = " << fmt(c.mms.cfl) << "\n";
    return o.str();
}

}  // namespace velab
