#include "velab/timeint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "velab/error.hpp"

namespace velab {

double max_wave_speed(const StateSnapshot& s, const PhysParams& params) {
    const long n = static_cast<long>(s.rho().size());
    const double* rho = s.rho().data();
    const double* u = s.u().data();
    const double* v = s.v().data();
    const double* f1 = s.f1().data();
    const double* f2 = s.f2().data();
    const double* f3 = s.f3().data();
    const double* f4 = s.f4().data();
    double smax = 0.0;
#pragma omp parallel for reduction(max : smax) schedule(static)
    for (long k = 0; k < n; ++k) {
        const double c = std::sqrt(params.gamma * std::pow(rho[k], params.gamma - 1.0));
        const double a = 1.0 + f1[k], b = f2[k], cc = f3[k], d = 1.0 + f4[k];
        const double sq = a * a + b * b + cc * cc + d * d;
        const double det = a * d - b * cc;
        const double disc = std::max(sq * sq - 4.0 * det * det, 0.0);
        const double fn = std::sqrt(0.5 * (sq + std::sqrt(disc)));
        smax = std::max(smax, std::abs(u[k]) + std::abs(v[k]) + c + fn);
    }
    return smax;
}

double cfl_dt(const StateSnapshot& s, const Grid& grid, const PhysParams& params, double cfl) {
    if (!(cfl > 0.0)) throw ValidationError("cfl must be positive");
    check_regime(s);
    const double h = grid.h();
    const double smax = max_wave_speed(s, params);
    double dt = h / smax;
    const double nu = params.eps * (2.0 * params.mu + params.lambda);
    if (nu > 0.0) dt = std::min(dt, h * h / (4.0 * nu));
    if (!std::isfinite(dt) || dt <= 0.0) throw StabilityError("cfl_dt: nonfinite step", s.t, "dt");
    return cfl * dt;
}

namespace {

void check_finite(const StateSnapshot& s, int stage) {
    for (Component c : kAllComponents)
        for (double v : s[c].values())
            if (!std::isfinite(v))
                throw StabilityError("nonfinite value in stage " + std::to_string(stage), s.t,
                                     std::string(component_name(c)), stage);
}

// out = a * base + b * (stage + dt * k)
StateSnapshot combine(const StateSnapshot& base, double a, const StateSnapshot& stage, const Tendency& k, double b,
                      double dt) {
    StateSnapshot out = base;
    for (int c = 0; c < kNumComponents; ++c) {
        const double* q0 = base.fields[c].data();
        const double* q1 = stage.fields[c].data();
        const double* kk = k.d[c].data();
        double* o = out.fields[c].data();
        const long n = static_cast<long>(base.fields[c].size());
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) o[i] = a * q0[i] + b * (q1[i] + dt * kk[i]);
    }
    return out;
}

}  // namespace

StateSnapshot ssprk3_step(const StateSnapshot& s, double dt, const RhsEvaluator& rhs, const Grid& grid, BcMode mode,
                          const BoundaryOptions& bc) {
    if (!(dt > 0.0)) throw ValidationError("ssprk3_step: dt must be positive");
    const double t = s.t;

    StateSnapshot s1 = combine(s, 0.0, s, rhs(s), 1.0, dt);
    s1.t = t + dt;
    check_finite(s1, 1);
    enforce_boundaries_inplace(s1, grid, mode, bc);

    StateSnapshot s2 = combine(s, 0.75, s1, rhs(s1), 0.25, dt);
    s2.t = t + 0.5 * dt;
    check_finite(s2, 2);
    enforce_boundaries_inplace(s2, grid, mode, bc);

    StateSnapshot s3 = combine(s, 1.0 / 3.0, s2, rhs(s2), 2.0 / 3.0, dt);
    s3.t = t + dt;
    check_finite(s3, 3);
    enforce_boundaries_inplace(s3, grid, mode, bc);
    return s3;
}

RhsEvaluator make_rhs(const Grid& grid, const PhysParams& params, const BoundaryOptions& bc,
                      const ManufacturedSolution* forcing) {
    return [&grid, params, bc, forcing](const StateSnapshot& s) {
        Tendency t = params.eps == 0.0 ? rhs_ideal(s, grid, params) : rhs_viscous(s, grid, params);
        add_sponge(t, s, grid, bc);
        if (forcing) t += mms_forcing(*forcing, s.t, grid, params);
        if (!params.elastic_coupling)
            for (Component c : {Component::f1, Component::f2, Component::f3, Component::f4}) t[c] *= 0.0;
        return t;
    };
}

std::pair<int, double> plan_steps(double t_end, double dt_max) {
    if (!(dt_max > 0.0)) throw ValidationError("plan_steps: dt must be positive");
    const int n = std::max(1, static_cast<int>(std::ceil(t_end / dt_max * (1.0 - 1e-14))));
    return {n, t_end / n};
}

RunResult run_simulation(const StateSnapshot& initial, const Grid& grid, const PhysParams& params, BcMode mode,
                         double t_end, const OutputPolicy& policy, const RunOptions& options) {
    params.validate();
    if (!same_shape(initial, grid)) throw ValidationError("run_simulation: state does not match grid");
    if (!(t_end >= 0.0)) throw ValidationError("t_end must be >= 0");
    if (policy.sample_interval < 1) throw ValidationError("sample_interval must be >= 1");
    if (policy.snapshot_interval < 0) throw ValidationError("snapshot_interval must be >= 0");
    if (options.z0_depth < 1) throw ValidationError("z0_depth must be >= 1");

    RunResult res{initial, History(static_cast<std::size_t>(options.z0_depth) + 1), {}, 0.0, 0};
    if (t_end == 0.0) return res;

    const double dt_max = options.dt ? *options.dt : cfl_dt(initial, grid, params, options.cfl);
    auto [nsteps, dt] = options.dt ? std::pair<int, double>{static_cast<int>(std::llround(t_end / dt_max)), 0.0}
                                   : plan_steps(t_end, dt_max);
    if (options.dt) {
        if (nsteps < 1 || std::abs(nsteps * dt_max - t_end) > 1e-9 * t_end)
            throw ValidationError("dt override must divide t_end");
        dt = dt_max;
    }
    res.dt = dt;

    const RhsEvaluator rhs = make_rhs(grid, params, options.bc, options.forcing);
    std::optional<DiagnosticsEngine> diag;
    if (options.diagnostics) diag.emplace(grid, params, options.diag);

    const double t0 = initial.t;
    StateSnapshot s = enforce_boundaries(initial, grid, mode, options.bc);
    check_regime(s);
    res.history.push(s);

    auto do_sample = [&]() {
        if (diag) {
            res.series.push_back(diag->sample(res.history));
            if (options.on_sample) options.on_sample(s, res.history, &res.series.back());
        } else if (options.on_sample) {
            options.on_sample(s, res.history, nullptr);
        }
    };
    do_sample();
    if (policy.snapshot_interval > 0 && policy.on_snapshot) policy.on_snapshot(s, 0);

    for (int n = 1; n <= nsteps; ++n) {
        const double allowed = cfl_dt(s, grid, params, options.cfl);
        if (dt > 2.0 * allowed)
            throw StabilityError("CFL violated by more than 2x (dt " + std::to_string(dt) + ", allowed " +
                                     std::to_string(allowed) + ")",
                                 s.t, "dt");
        s = ssprk3_step(s, dt, rhs, grid, mode, options.bc);
        s.t = t0 + n * dt;
        try {
            check_regime(s);
        } catch (const RegimeError& e) {
            throw RegimeError(e.what(), s.t, e.field());
        }
        res.history.push(s);
        if (n % policy.sample_interval == 0 || n == nsteps) do_sample();
        if (policy.snapshot_interval > 0 && policy.on_snapshot && n % policy.snapshot_interval == 0)
            policy.on_snapshot(s, n);
    }
    res.steps = nsteps;
    res.final_state = std::move(s);
    return res;
}

}  // namespace velab
