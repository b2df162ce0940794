// Acceptance suite: one PASS/FAIL line per criterion.  Exit status is the
// number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "velab/convergence.hpp"
#include "velab/diagnostics.hpp"
#include "velab/initdata.hpp"
#include "velab/snapshot_io.hpp"
#include "velab/sweep.hpp"
#include "velab/timeint.hpp"

using namespace velab;

namespace {

constexpr double kTwoPi = 6.283185307179586;

namespace tol {
constexpr double equilibrium_dev = 1e-12;
constexpr int equilibrium_steps = 10000;
constexpr double equilibrium_seconds = 10.0;
constexpr double mms_order = 1.9;
constexpr double mms_seconds = 120.0;
constexpr double det_coeff = 10.0;
constexpr double piola_coeff = 50.0;
constexpr double recovery_coeff = 10.0;
constexpr double f3_coeff = 10.0;
constexpr double refine_ratio = 3.5;
constexpr double wall_u_ratio = 2.0;
constexpr double nm_growth = 2.0;
constexpr double sweep_seconds = 900.0;
constexpr double exponent_gap = 0.2;
constexpr double ideal_band = 3.0;
constexpr double norm_rel = 1e-10;
constexpr int norm_pairs = 100;
}  // namespace tol

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome equilibrium() {
    const Grid g = build_grid(64, 65, kTwoPi, kTwoPi);
    PhysParams p;
    p.eps = 1e-2;
    const StateSnapshot s0 = uniform_state(g);
    const RhsEvaluator rhs = make_rhs(g, p, {}, nullptr);
    const double dt = cfl_dt(s0, g, p, 0.4);
    const auto t0 = std::chrono::steady_clock::now();
    StateSnapshot s = s0;
    for (int n = 0; n < tol::equilibrium_steps; ++n) s = ssprk3_step(s, dt, rhs, g, BcMode::viscous);
    const double el = seconds_since(t0);
    double dev = 0.0;
    for (Component c : kAllComponents) dev = std::max(dev, max_abs(s[c] - s0[c]));
    return {dev <= tol::equilibrium_dev && el < tol::equilibrium_seconds,
            fmt("max deviation %.3e after %d steps, %.2f s", dev, tol::equilibrium_steps, el)};
}

Outcome mms() {
    const auto t0 = std::chrono::steady_clock::now();
    const MmsStudy st = run_mms_study({32, 64, 128}, MmsStudyOptions{});
    const double el = seconds_since(t0);
    bool ok = el < tol::mms_seconds;
    std::string d;
    for (Component c : {Component::rho, Component::u, Component::v, Component::f2}) {
        const double q = st.order[static_cast<int>(c)];
        ok = ok && q >= tol::mms_order;
        d += fmt("%s %.3f ", std::string(component_name(c)).c_str(), q);
    }
    return {ok, "L2 slopes " + d + fmt("(%.1f s)", el)};
}

struct ConstraintRun {
    double h2 = 0.0;
    double det = 0.0, piola = 0.0, dyv = 0.0, dyu = 0.0, dyf3 = 0.0, dyf4 = 0.0, dyf1 = 0.0, f3 = 0.0, uw = 0.0;
};

ConstraintRun constraint_run(int nx, bool slip) {
    const Grid g = build_grid(nx, nx + 1, kTwoPi, kTwoPi);
    const StateSnapshot s = piola_initial_data(g, DisplacementSpec{});
    PhysParams p;
    p.eps = 0.0;
    OutputPolicy pol;
    RunOptions o;
    o.diag.m = 1;
    o.bc.ideal_slip = slip;
    ConstraintRun r;
    r.h2 = g.h() * g.h();
    o.on_sample = [&](const StateSnapshot&, const History&, const NormReport* n) {
        r.det = std::max(r.det, n->det_res);
        r.piola = std::max(r.piola, n->piola_res);
        r.dyv = std::max(r.dyv, n->rec_res_dyv);
        r.dyu = std::max(r.dyu, n->rec_res_dyu);
        r.dyf3 = std::max(r.dyf3, n->rec_res_dyf3);
        r.dyf4 = std::max(r.dyf4, n->rec_res_dyf4);
        r.dyf1 = std::max(r.dyf1, n->rec_res_dyf1);
        r.f3 = std::max(r.f3, n->wall_f3_trace);
        r.uw = std::max(r.uw, n->wall_u_trace);
    };
    run_simulation(s, g, p, BcMode::ideal, 1.0, pol, o);
    return r;
}

const ConstraintRun& constraint_cached(int nx, bool slip) {
    static std::map<std::pair<int, bool>, ConstraintRun> cache;
    auto it = cache.find({nx, slip});
    if (it == cache.end()) it = cache.emplace(std::pair{nx, slip}, constraint_run(nx, slip)).first;
    return it->second;
}

Outcome constraints() {
    const ConstraintRun &a = constraint_cached(64, false), &b = constraint_cached(128, false);
    const bool ok = a.det <= tol::det_coeff * a.h2 && a.piola <= tol::piola_coeff * a.h2 &&
                    a.det / b.det >= tol::refine_ratio && a.piola / b.piola >= tol::refine_ratio;
    return {ok, fmt("det %.3e (%.3g h^2, ratio %.2f)  piola %.3e (%.3g h^2, ratio %.2f)", a.det, a.det / a.h2,
                    a.det / b.det, a.piola, a.piola / a.h2, a.piola / b.piola)};
}

Outcome recovery() {
    const ConstraintRun &a = constraint_cached(64, false), &b = constraint_cached(128, false);
    const bool ok = a.dyv <= tol::recovery_coeff * a.h2 && a.dyu <= tol::recovery_coeff * a.h2 &&
                    a.dyv / b.dyv >= tol::refine_ratio && a.dyu / b.dyu >= tol::refine_ratio;
    return {ok, fmt("dyv %.3e (%.3g h^2, ratio %.2f)  dyu %.3e (%.3g h^2, ratio %.2f)  "
                    "[dyf3 %.2e dyf4 %.2e dyf1 %.2e, ratios %.2f %.2f %.2f]",
                    a.dyv, a.dyv / a.h2, a.dyv / b.dyv, a.dyu, a.dyu / a.h2, a.dyu / b.dyu, a.dyf3, a.dyf4, a.dyf1,
                    a.dyf3 / b.dyf3, a.dyf4 / b.dyf4, a.dyf1 / b.dyf1)};
}

Outcome wall_traces() {
    const ConstraintRun& a = constraint_cached(64, false);
    // u stays free on the wall only under the no-penetration closure
    const ConstraintRun &sa = constraint_cached(64, true), &sb = constraint_cached(128, true);
    const double ratio = sa.uw / sb.uw;
    const bool ok = a.f3 <= tol::f3_coeff * a.h2 && sa.f3 <= tol::f3_coeff * sa.h2 && ratio >= tol::wall_u_ratio;
    return {ok, fmt("f3 trace %.3e (no-slip), %.3e (v-only)  u trace v-only 64: %.3e 128: %.3e ratio %.2f", a.f3, sa.f3,
                    sa.uw, sb.uw, ratio)};
}

Outcome inviscid_limit() {
    SweepPlan p;
    p.nx = 128;
    p.ny = 129;
    const auto t0 = std::chrono::steady_clock::now();
    const SweepReport r = run_inviscid_limit_sweep(p);
    const double el = seconds_since(t0);
    bool ok = r.complete() && el < tol::sweep_seconds;
    double nm_max = 0.0;
    std::string d;
    for (std::size_t k = 0; k < r.members.size(); ++k) {
        const SweepMember& m = r.members[k];
        nm_max = std::max(nm_max, m.peak_nm);
        d += fmt("eps %.4g: err %.3e dy %.3e nm %.3f; ", m.eps, m.err_sup, m.dy_err_sup, m.peak_nm);
        if (k > 0) {
            ok = ok && m.err_sup < r.members[k - 1].err_sup;
            ok = ok && m.dy_err_sup < r.members[k - 1].dy_err_sup;
        }
    }
    ok = ok && !r.members.empty() && nm_max <= tol::nm_growth * r.members.front().peak_nm;
    return {ok, d + fmt("(%.1f s)", el)};
}

Outcome layer_contrast() {
    SweepPlan p;
    p.nx = 32;
    p.ny = 257;
    p.ly = 2.0;
    p.sample_interval = 20;
    p.init.amplitude = 0.0;
    p.init.velocity = VelocityInit::shear;
    p.init.velocity_amplitude = 0.01;
    p.init.velocity_width = 0.5;
    const NsComparison c = ns_comparison(p);
    if (!c.layer_exponent_on || !c.layer_exponent_off) return {false, "exponent fit unavailable"};
    const double on = *c.layer_exponent_on, off = *c.layer_exponent_off;
    const double ref = c.coupled.reference_wall_layer;
    bool band = ref > 0.0;
    for (const SweepMember& m : c.coupled.members)
        band = band && m.peak_wall_layer <= tol::ideal_band * ref && m.peak_wall_layer >= ref / tol::ideal_band;
    return {off - on >= tol::exponent_gap && band,
            fmt("exponent on %.3f off %.3f gap %.3f; ideal indicator %.4e, on-branch within %.0fx: %s", on, off,
                off - on, ref, tol::ideal_band, band ? "yes" : "no")};
}

StateSnapshot with_u(const Grid& g, const Field2D& f, double t) {
    StateSnapshot s = uniform_state(g);
    s[Component::u] = f;
    s.t = t;
    return s;
}

Outcome norm_machinery() {
    const Grid g = build_grid(24, 25, kTwoPi, 2.0);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), scal(-3.0, 3.0);
    auto random_field = [&] {
        Field2D f = g.zeros();
        for (std::size_t k = 0; k < f.size(); ++k) f[k] = unit(rng);
        return f;
    };
    double worst_h = 0.0, worst_t = 0.0;
    bool mono = true;
    for (int trial = 0; trial < tol::norm_pairs; ++trial) {
        History ha(4), hb(4), hs(4), hl(4);
        const double lam = scal(rng);
        for (int n = 0; n < 3; ++n) {
            const Field2D a = random_field(), b = random_field();
            ha.push(with_u(g, a, 0.1 * n));
            hb.push(with_u(g, b, 0.1 * n));
            hs.push(with_u(g, a + b, 0.1 * n));
            hl.push(with_u(g, lam * a, 0.1 * n));
        }
        for (bool time : {false, true}) {
            double prev = 0.0;
            for (int m = 0; m <= 2; ++m) {
                const double na = conormal_norm(ha, g, select(Component::u), m, time);
                const double nb = conormal_norm(hb, g, select(Component::u), m, time);
                const double ns = conormal_norm(hs, g, select(Component::u), m, time);
                const double nl = conormal_norm(hl, g, select(Component::u), m, time);
                worst_h = std::max(worst_h, std::abs(nl - std::abs(lam) * na) / (std::abs(lam) * na));
                worst_t = std::max(worst_t, (ns - (na + nb)) / (na + nb));
                mono = mono && na >= prev;
                prev = na;
            }
        }
    }

    const Grid gs = build_grid(64, 65, kTwoPi, kTwoPi);
    StateSnapshot s = uniform_state(gs);
    for (Component c : kAllComponents)
        for (std::size_t k = 0; k < s[c].size(); ++k) s[c][k] += 0.1 * unit(rng);
    s.t = 0.7;
    const std::string path = (std::filesystem::temp_directory_path() / "velab_acceptance.vels").string();
    PhysParams p;
    p.eps = 1e-3;
    persist_snapshot(s, p, gs.lx, gs.ly, path);
    const LoadedSnapshot l = load_snapshot(path);
    const bool io = l.state == s && l.params.eps == p.eps && l.lx == gs.lx && l.ly == gs.ly;
    std::filesystem::remove(path);

    return {worst_h <= tol::norm_rel && worst_t <= tol::norm_rel && mono && io,
            fmt("homogeneity %.2e, triangle excess %.2e over %d pairs; monotone %s; snapshot round trip %s", worst_h,
                std::max(worst_t, 0.0), tol::norm_pairs, mono ? "yes" : "no", io ? "bit exact" : "differs")};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"velab acceptance suite"};
    std::vector<int> only;
    app.add_option("criteria", only, "criteria to run (default all)")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char*, Outcome (*)()>> all = {
        {"equilibrium exactness", equilibrium},
        {"MMS spatial order", mms},
        {"constraint propagation", constraints},
        {"recovery identities", recovery},
        {"wall traces", wall_traces},
        {"inviscid limit", inviscid_limit},
        {"boundary-layer contrast", layer_contrast},
        {"norm machinery", norm_machinery},
    };
    const std::set<int> chosen(only.begin(), only.end());
    int failed = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
        const int id = static_cast<int>(k) + 1;
        if (!chosen.empty() && !chosen.count(id)) continue;
        Outcome o;
        try {
            o = all[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        std::printf("criterion %d %s: %s  %s\n", id, all[k].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed;
}
