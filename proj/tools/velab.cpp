// velab command-line driver: run, mms, sweep, compare-ns, norms.
#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "velab/config.hpp"
#include "velab/convergence.hpp"
#include "velab/error.hpp"
#include "velab/reports.hpp"
#include "velab/snapshot_io.hpp"
#include "velab/sweep.hpp"
#include "velab/timeint.hpp"

namespace fs = std::filesystem;
using namespace velab;

namespace {

struct Common {
    std::string config;
    std::string out = "velab_out";
    bool quiet = false;
    int threads = 0;
};

void say(const Common& c, const std::string& s) {
    if (!c.quiet) std::cout << s << "\n";
}

std::string num(double v) { return format_double(v); }

int cmd_run(const Common& o) {
    const Config cfg = load_config(o.config);
    const Grid grid = build_grid(cfg.grid.nx, cfg.grid.ny, cfg.grid.lx, cfg.grid.ly);
    SweepPlan plan = cfg.sweep_plan();
    plan.params = cfg.physics;
    const StateSnapshot init = sweep_initial_state(plan, grid);

    fs::create_directories(o.out);
    OutputPolicy pol;
    pol.sample_interval = cfg.run.sample_interval;
    pol.snapshot_interval = cfg.run.snapshot_interval;
    if (pol.snapshot_interval > 0) {
        fs::create_directories(fs::path(o.out) / "snapshots");
        pol.on_snapshot = [&](const StateSnapshot& s, int step) {
            char name[64];
            std::snprintf(name, sizeof name, "snap_%06d.vels", step);
            persist_snapshot(s, cfg.physics, grid.lx, grid.ly, (fs::path(o.out) / "snapshots" / name).string());
        };
    }
    RunOptions ro;
    ro.cfl = cfg.run.cfl;
    ro.bc = cfg.boundary();
    ro.z0_depth = cfg.run.z0_depth;
    ro.diag.m = cfg.run.m;
    const RunResult res = run_simulation(init, grid, cfg.physics, cfg.run_mode(), cfg.run.t_end, pol, ro);
    emit_reports(res.series, cfg.run.m, std::nullopt, o.out);
    persist_snapshot(res.final_state, cfg.physics, grid.lx, grid.ly, (fs::path(o.out) / "final.vels").string());
    write_text((fs::path(o.out) / "config_used.ini").string(), format_config(cfg));

    say(o, "mode " + std::string(bc_mode_name(cfg.run_mode())) + ", " + std::to_string(res.steps) + " steps, dt " +
               num(res.dt));
    if (!res.series.empty()) {
        const NormReport& r = res.series.back();
        say(o, "t " + num(r.t) + "  nm_proxy " + num(r.nm_proxy) + "  q " + num(r.q_proxy) + "  det_res " +
                   num(r.det_res) + "  piola_res " + num(r.piola_res) + "  wall_layer " + num(r.wall_layer));
    }
    say(o, "wrote " + o.out + "/norms.csv");
    return 0;
}

int cmd_mms(const Common& o) {
    const Config cfg = load_config(o.config);
    if (!(cfg.physics.eps > 0.0)) throw ValidationError("mms: physics.eps must be > 0");
    MmsStudyOptions mo;
    mo.params = cfg.physics;
    mo.lx = cfg.grid.lx;
    mo.ly = cfg.mms.ly;
    mo.t_end = cfg.mms.t_end;
    mo.cfl = cfg.mms.cfl;
    mo.amplitude = cfg.mms.amplitude;
    const MmsStudy st = run_mms_study(cfg.mms.resolutions, mo);

    fs::create_directories(o.out);
    std::string csv = "nx,ny,h,dt,steps";
    for (Component c : kAllComponents) csv += ",err_" + std::string(component_name(c));
    csv += "\n";
    for (const auto& lv : st.levels) {
        csv += std::to_string(lv.nx) + "," + std::to_string(lv.ny) + "," + num(lv.h) + "," + num(lv.dt) + "," +
               std::to_string(lv.steps);
        for (double e : lv.l2_error) csv += "," + num(e);
        csv += "\n";
    }
    csv += "order,,,,";
    for (double q : st.order) csv += "," + num(q);
    csv += "\n";
    write_text((fs::path(o.out) / "mms.csv").string(), csv);
    for (Component c : kAllComponents)
        say(o, std::string(component_name(c)) + " order " + num(st.order[static_cast<int>(c)]));
    return 0;
}

void print_sweep(const Common& o, const std::string& label, const SweepReport& r) {
    say(o, label + " dt " + num(r.dt) + " steps " + std::to_string(r.steps) + " reference wall " +
               num(r.reference_wall_layer));
    for (const auto& m : r.members)
        say(o, "  eps " + num(m.eps) + (m.ok ? "" : " FAILED: " + m.failure) + "  err " + num(m.err_sup) + "  dy_err " +
                   num(m.dy_err_sup) + "  wall " + num(m.peak_wall_layer) + "  nm " + num(m.peak_nm));
}

int cmd_sweep(const Common& o) {
    const Config cfg = load_config(o.config);
    const SweepReport r = run_inviscid_limit_sweep(cfg.sweep_plan());
    emit_reports({}, cfg.run.m, r, o.out);
    print_sweep(o, "sweep", r);
    return r.complete() ? 0 : 3;
}

int cmd_compare_ns(const Common& o) {
    const Config cfg = load_config(o.config);
    const NsComparison c = ns_comparison(cfg.sweep_plan());
    emit_ns_comparison(c, o.out);
    print_sweep(o, "coupling on", c.coupled);
    print_sweep(o, "coupling off", c.uncoupled);
    if (c.layer_exponent_on && c.layer_exponent_off)
        say(o, "layer exponent on " + num(*c.layer_exponent_on) + ", off " + num(*c.layer_exponent_off) + ", gap " +
                   num(*c.layer_exponent_off - *c.layer_exponent_on));
    return c.coupled.complete() && c.uncoupled.complete() ? 0 : 3;
}

int cmd_norms(const Common& o, const std::vector<std::string>& files) {
    const Config cfg = load_config(o.config);
    if (files.empty()) throw ValidationError("norms: no snapshot files given");
    History hist(static_cast<std::size_t>(cfg.run.z0_depth) + 1);
    std::optional<Grid> grid;
    std::optional<DiagnosticsEngine> engine;
    std::vector<NormReport> series;
    for (const auto& f : files) {
        LoadedSnapshot ls = load_snapshot(f);
        if (!grid) {
            grid = build_grid(ls.state.nx(), ls.state.ny(), ls.lx, ls.ly);
            PhysParams p = cfg.physics;
            p.gamma = ls.params.gamma;
            p.mu = ls.params.mu;
            p.lambda = ls.params.lambda;
            p.eps = ls.params.eps;
            engine.emplace(*grid, p, DiagnosticsConfig{cfg.run.m, true});
        } else if (!same_shape(ls.state, *grid)) {
            throw ValidationError("norms: " + f + " has a different grid");
        }
        hist.push(std::move(ls.state));
        series.push_back(engine->sample(hist));
    }
    emit_reports(series, cfg.run.m, std::nullopt, o.out);
    say(o, "wrote " + std::to_string(series.size()) + " rows to " + o.out + "/norms.csv");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"velab: compressible viscoelastic half-plane lab"};
    app.require_subcommand(1);
    Common common;
    std::vector<std::string> files;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config, "configuration file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", common.out, "output directory");
        sub->add_flag("--quiet", common.quiet, "suppress progress output");
        sub->add_option("--threads", common.threads, "OpenMP thread count")->check(CLI::PositiveNumber);
    };
    CLI::App* run = app.add_subcommand("run", "single simulation");
    CLI::App* mms = app.add_subcommand("mms", "manufactured-solution convergence study");
    CLI::App* sweep = app.add_subcommand("sweep", "inviscid-limit sweep");
    CLI::App* cns = app.add_subcommand("compare-ns", "coupled vs uncoupled boundary-layer contrast");
    CLI::App* norms = app.add_subcommand("norms", "recompute diagnostics from stored snapshots");
    for (CLI::App* s : {run, mms, sweep, cns, norms}) add_common(s);
    norms->add_option("snapshots", files, "snapshot files in time order")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (common.threads > 0) omp_set_num_threads(common.threads);

    try {
        if (*run) return cmd_run(common);
        if (*mms) return cmd_mms(common);
        if (*sweep) return cmd_sweep(common);
        if (*cns) return cmd_compare_ns(common);
        return cmd_norms(common, files);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RuntimeFailure& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
}
