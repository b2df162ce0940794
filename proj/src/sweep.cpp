#include "velab/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "velab/error.hpp"
#include "velab/timeint.hpp"

namespace velab {

void SweepPlan::validate() const {
    if (eps_list.empty()) throw ValidationError("sweep: eps_list must be nonempty");
    for (std::size_t k = 0; k < eps_list.size(); ++k) {
        if (!(eps_list[k] > 0.0 && eps_list[k] < 1.0)) throw ValidationError("sweep: eps values must lie in (0, 1)");
        if (k > 0 && !(eps_list[k] < eps_list[k - 1]))
            throw ValidationError("sweep: eps_list must be strictly decreasing");
    }
    if (!(t_end > 0.0)) throw ValidationError("sweep: t_end must be positive");
    if (!(cfl > 0.0)) throw ValidationError("sweep: cfl must be positive");
    if (sample_interval < 1) throw ValidationError("sweep: sample_interval must be >= 1");
    if (m < 0 || m > 2) throw ValidationError("sweep: m must be in 0..2");
    if (z0_depth < 1) throw ValidationError("sweep: z0_depth must be >= 1");
    params.validate();
    init.validate();
}

bool SweepReport::complete() const {
    return std::all_of(members.begin(), members.end(), [](const SweepMember& m) { return m.ok; });
}

double fit_rate(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 2) throw ValidationError("fit_rate: need at least two pairs");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [e, r] : pairs) {
        if (!(e > 0.0) || !(r > 0.0)) throw ValidationError("fit_rate: entries must be positive");
        const double x = std::log(e), y = std::log(r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pairs.size());
    const double den = n * sxx - sx * sx;
    if (!(std::abs(den) > 0.0)) throw ValidationError("fit_rate: eps values must differ");
    return (n * sxy - sx * sy) / den;
}

StateSnapshot sweep_initial_state(const SweepPlan& plan, const Grid& grid) {
    StateSnapshot s = piola_initial_data(grid, plan.init);
    if (!plan.params.elastic_coupling) {
        s[Component::rho] = grid.constant(1.0);
        for (Component c : {Component::f1, Component::f2, Component::f3, Component::f4}) s[c] = grid.zeros();
    }
    return s;
}

namespace {

struct Trajectory {
    std::vector<StateSnapshot> samples;
    double peak_wall = 0.0, peak_nm = 0.0, peak_q = 0.0;
};

Trajectory integrate(const StateSnapshot& init, const Grid& grid, const PhysParams& params, BcMode mode,
                     const SweepPlan& plan, double dt, bool keep_samples,
                     const std::vector<StateSnapshot>* reference, SweepMember* member) {
    Trajectory tr;
    OutputPolicy policy;
    policy.sample_interval = plan.sample_interval;
    RunOptions opt;
    opt.cfl = plan.cfl;
    opt.dt = dt;
    opt.bc = plan.bc;
    opt.z0_depth = plan.z0_depth;
    opt.diag.m = plan.m;
    std::size_t idx = 0;
    opt.on_sample = [&](const StateSnapshot& s, const History&, const NormReport* r) {
        if (r) {
            tr.peak_wall = std::max(tr.peak_wall, r->wall_layer);
            tr.peak_nm = std::max(tr.peak_nm, r->nm_proxy);
            tr.peak_q = std::max(tr.peak_q, r->q_proxy);
        }
        if (keep_samples) tr.samples.push_back(s);
        if (reference && member) {
            if (idx >= reference->size()) throw RuntimeFailure("sweep: sample lattice mismatch");
            const StateSnapshot& ref = (*reference)[idx++];
            if (std::abs(ref.t - s.t) > 1e-12 * std::max(1.0, std::abs(s.t)))
                throw RuntimeFailure("sweep: sample times differ");
            for (Component c : kAllComponents) {
                Field2D d = s[c] - ref[c];
                member->err_sup = std::max(member->err_sup, max_abs_interior(d));
                member->dy_err_sup = std::max(member->dy_err_sup, max_abs_interior(diff(d, grid, Axis::y)));
            }
        }
    };
    run_simulation(init, grid, params, mode, plan.t_end, policy, opt);
    return tr;
}

}  // namespace

SweepReport run_inviscid_limit_sweep(const SweepPlan& plan) {
    plan.validate();
    const Grid grid = build_grid(plan.nx, plan.ny, plan.lx, plan.ly);
    const StateSnapshot init = sweep_initial_state(plan, grid);
    const bool coupled = plan.params.elastic_coupling;
    // The uncoupled reference is compressible Euler, which only admits no-penetration.
    const BcMode ref_mode = BcMode::ideal;
    const BcMode member_mode = coupled ? BcMode::viscous : BcMode::ns_compare;

    PhysParams ref_params = plan.params;
    ref_params.eps = 0.0;
    double dt_max = cfl_dt(init, grid, ref_params, plan.cfl);
    for (double e : plan.eps_list) {
        PhysParams p = plan.params;
        p.eps = e;
        dt_max = std::min(dt_max, cfl_dt(init, grid, p, plan.cfl));
    }
    const auto [steps, dt] = plan_steps(plan.t_end, dt_max);

    SweepReport rep;
    rep.elastic_coupling = coupled;
    rep.reference_mode = std::string(bc_mode_name(ref_mode));
    rep.dt = dt;
    rep.steps = steps;
    rep.sample_interval = plan.sample_interval;
    rep.nx = plan.nx;
    rep.ny = plan.ny;
    rep.lx = plan.lx;
    rep.ly = plan.ly;
    rep.amplitude = plan.init.amplitude;
    rep.filter_kappa = plan.params.filter_kappa;

    SweepPlan ref_plan = plan;
    ref_plan.bc.ideal_slip = plan.bc.ideal_slip || !coupled;
    const Trajectory ref = integrate(init, grid, ref_params, ref_mode, ref_plan, dt, true, nullptr, nullptr);
    rep.reference_wall_layer = ref.peak_wall;
    rep.reference_nm = ref.peak_nm;
    rep.reference_samples = static_cast<int>(ref.samples.size());

    for (double e : plan.eps_list) {
        SweepMember m;
        m.eps = e;
        PhysParams p = plan.params;
        p.eps = e;
        try {
            const Trajectory tr = integrate(init, grid, p, member_mode, plan, dt, false, &ref.samples, &m);
            m.peak_wall_layer = tr.peak_wall;
            m.peak_nm = tr.peak_nm;
            m.peak_q = tr.peak_q;
            m.ok = true;
        } catch (const RuntimeFailure& ex) {
            m.ok = false;
            m.failure = ex.what();
        }
        rep.members.push_back(m);
    }

    auto rate = [&](auto get) -> std::optional<double> {
        std::vector<std::pair<double, double>> pts;
        for (const auto& m : rep.members)
            if (m.ok && get(m) > 0.0) pts.emplace_back(m.eps, get(m));
        if (pts.size() < 2) return std::nullopt;
        return fit_rate(pts);
    };
    rep.err_rate = rate([](const SweepMember& m) { return m.err_sup; });
    rep.dy_err_rate = rate([](const SweepMember& m) { return m.dy_err_sup; });
    rep.wall_layer_rate = rate([](const SweepMember& m) { return m.peak_wall_layer; });
    return rep;
}

NsComparison ns_comparison(const SweepPlan& plan) {
    if (plan.init.velocity == VelocityInit::none || plan.init.velocity_amplitude == 0.0)
        throw ValidationError("compare-ns: plan needs a nonzero initial shear");
    NsComparison out;
    SweepPlan on = plan, off = plan;
    on.params.elastic_coupling = true;
    off.params.elastic_coupling = false;
    out.coupled = run_inviscid_limit_sweep(on);
    out.uncoupled = run_inviscid_limit_sweep(off);
    if (out.coupled.wall_layer_rate) out.layer_exponent_on = -*out.coupled.wall_layer_rate;
    if (out.uncoupled.wall_layer_rate) out.layer_exponent_off = -*out.uncoupled.wall_layer_rate;
    return out;
}

}  // namespace velab
