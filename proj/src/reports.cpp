#include "velab/reports.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "velab/error.hpp"

namespace velab {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

json number(double v) {
    // JSON has no non-finite literals.
    if (!std::isfinite(v)) return nullptr;
    return v;
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

std::string two_column(const std::vector<std::pair<double, double>>& pts, const std::string& header) {
    std::string s = "# " + header + "\n";
    for (auto [a, b] : pts) s += format_double(a) + " " + format_double(b) + "\n";
    return s;
}

}  // namespace

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("write failed for '" + path + "'");
}

std::string norms_csv(const std::vector<NormReport>& series, int m) {
    std::string s;
    const auto cols = norm_report_columns(m);
    for (std::size_t k = 0; k < cols.size(); ++k) s += (k ? "," : "") + cols[k];
    s += "\n";
    for (const auto& r : series) {
        const auto row = norm_report_row(r, m);
        for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + format_double(row[k]);
        s += "\n";
    }
    return s;
}

std::string sweep_csv(const SweepReport& r) {
    std::string s = "eps,ok,err_sup,dy_err_sup,peak_wall_layer,peak_nm,peak_q\n";
    for (const auto& m : r.members)
        s += format_double(m.eps) + "," + (m.ok ? "1" : "0") + "," + format_double(m.err_sup) + "," +
             format_double(m.dy_err_sup) + "," + format_double(m.peak_wall_layer) + "," + format_double(m.peak_nm) +
             "," + format_double(m.peak_q) + "\n";
    return s;
}

std::string report_tag(const SweepReport& r) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%dx%d_a%g", r.nx, r.ny, r.amplitude);
    return buf;
}

std::string sweep_json(const SweepReport& r) {
    json members = json::array();
    for (const auto& m : r.members) {
        json j{{"eps", number(m.eps)},
               {"ok", m.ok},
               {"err_sup", number(m.err_sup)},
               {"dy_err_sup", number(m.dy_err_sup)},
               {"peak_wall_layer", number(m.peak_wall_layer)},
               {"peak_nm", number(m.peak_nm)},
               {"peak_q", number(m.peak_q)}};
        if (!m.ok) j["failure"] = m.failure;
        members.push_back(j);
    }
    json doc{{"metadata",
              {{"nx", r.nx},
               {"ny", r.ny},
               {"lx", number(r.lx)},
               {"ly", number(r.ly)},
               {"amplitude", number(r.amplitude)},
               {"filter_kappa", number(r.filter_kappa)},
               {"elastic_coupling", r.elastic_coupling},
               {"reference_mode", r.reference_mode},
               {"dt", number(r.dt)},
               {"steps", r.steps},
               {"sample_interval_steps", r.sample_interval},
               {"sup_in_time", "taken on the sample lattice"},
               {"seed", nullptr}}},
             {"reference", {{"peak_wall_layer", number(r.reference_wall_layer)},
                            {"peak_nm", number(r.reference_nm)},
                            {"samples", r.reference_samples}}},
             {"members", members},
             {"rates",
              {{"err", optional_number(r.err_rate)},
               {"dy_err", optional_number(r.dy_err_rate)},
               {"wall_layer", optional_number(r.wall_layer_rate)}}},
             {"complete", r.complete()}};
    // dump() prints doubles with enough digits to round-trip.
    return doc.dump(2) + "\n";
}

namespace {

void write_sweep(const SweepReport& r, const fs::path& dir, const std::string& stem) {
    write_text((dir / (stem + ".json")).string(), sweep_json(r));
    write_text((dir / (stem + ".csv")).string(), sweep_csv(r));
    const fs::path plot = dir / "plotdata";
    fs::create_directories(plot);
    std::vector<std::pair<double, double>> err, dy, wall;
    for (const auto& m : r.members) {
        if (!m.ok) continue;
        err.emplace_back(m.eps, m.err_sup);
        dy.emplace_back(m.eps, m.dy_err_sup);
        wall.emplace_back(m.eps, m.peak_wall_layer);
    }
    const std::string tag = (stem == "sweep" ? "" : stem + "_") + report_tag(r);
    write_text((plot / ("err_vs_eps_" + tag + ".dat")).string(), two_column(err, "eps sup_t|U^eps-U^0|"));
    write_text((plot / ("dyerr_vs_eps_" + tag + ".dat")).string(), two_column(dy, "eps sup_t|dy(U^eps-U^0)|"));
    write_text((plot / ("wall_vs_eps_" + tag + ".dat")).string(), two_column(wall, "eps peak wall_layer"));
}

void ensure_dir(const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir + "': " + ec.message());
}

}  // namespace

void emit_reports(const std::vector<NormReport>& series, int m, const std::optional<SweepReport>& sweep,
                  const std::string& out_dir) {
    ensure_dir(out_dir);
    const fs::path dir(out_dir);
    write_text((dir / "norms.csv").string(), norms_csv(series, m));
    fs::create_directories(dir / "plotdata");
    std::vector<std::pair<double, double>> wall;
    for (const auto& r : series) wall.emplace_back(r.t, r.wall_layer);
    write_text((dir / "plotdata" / "wall_vs_t.dat").string(), two_column(wall, "t wall_layer"));
    if (sweep) write_sweep(*sweep, dir, "sweep");
}

void emit_ns_comparison(const NsComparison& c, const std::string& out_dir) {
    ensure_dir(out_dir);
    const fs::path dir(out_dir);
    write_sweep(c.coupled, dir, "sweep_on");
    write_sweep(c.uncoupled, dir, "sweep_off");
    json doc{{"layer_exponent_on", optional_number(c.layer_exponent_on)},
             {"layer_exponent_off", optional_number(c.layer_exponent_off)},
             {"exponent_gap", (c.layer_exponent_on && c.layer_exponent_off)
                                  ? number(*c.layer_exponent_off - *c.layer_exponent_on)
                                  : json(nullptr)},
             {"reference_wall_layer_on", number(c.coupled.reference_wall_layer)},
             {"reference_wall_layer_off", number(c.uncoupled.reference_wall_layer)}};
    write_text((dir / "contrast.json").string(), doc.dump(2) + "\n");
}

}  // namespace velab
