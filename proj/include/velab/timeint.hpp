/// @file timeint.hpp
/// @brief Explicit SSP-RK3 time stepping and the fixed-step simulation driver.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "velab/boundary.hpp"
#include "velab/diagnostics.hpp"
#include "velab/dynamics.hpp"
#include "velab/grid.hpp"
#include "velab/history.hpp"
#include "velab/mms.hpp"
#include "velab/state.hpp"

namespace velab {

using RhsEvaluator = std::function<Tendency(const StateSnapshot&)>;

/// max over nodes of |u| + |v| + sqrt(gamma rho^(gamma-1)) + |F|_2, with |F|_2
/// the spectral norm (largest singular value).
double max_wave_speed(const StateSnapshot& s, const PhysParams& params);

/// cfl * min(h / s_max, h^2 / (4 eps (2 mu + lambda))); the viscous bound is
/// dropped when eps (2 mu + lambda) == 0.
double cfl_dt(const StateSnapshot& s, const Grid& grid, const PhysParams& params, double cfl);

/// One SSP-RK3 step (Shu-Osher form).  Stage times t, t + dt, t + dt/2; the
/// boundary closure is applied to every stage.  Non-finite stage values raise
/// StabilityError carrying the stage index (1..3).
StateSnapshot ssprk3_step(const StateSnapshot& s, double dt, const RhsEvaluator& rhs, const Grid& grid, BcMode mode,
                          const BoundaryOptions& bc = {});

/// Right-hand side used by run_simulation: rhs_ideal for eps == 0, rhs_viscous
/// otherwise, plus the sponge and an optional manufactured forcing.  With
/// elastic coupling off the deformation tendencies are zeroed, so F stays at
/// its initial value.
RhsEvaluator make_rhs(const Grid& grid, const PhysParams& params, const BoundaryOptions& bc,
                      const ManufacturedSolution* forcing = nullptr);

struct OutputPolicy {
    int sample_interval = 1;    ///< diagnostics every this many steps (and at step 0)
    int snapshot_interval = 0;  ///< 0 disables snapshot callbacks
    std::function<void(const StateSnapshot&, int step)> on_snapshot;
};

struct RunOptions {
    double cfl = 0.4;
    /// Overrides the CFL step (must not exceed twice the CFL bound).
    std::optional<double> dt;
    BoundaryOptions bc;
    const ManufacturedSolution* forcing = nullptr;
    int z0_depth = 3;
    bool diagnostics = true;
    DiagnosticsConfig diag;
    /// Called at each sample after diagnostics (report is null when diagnostics are off).
    std::function<void(const StateSnapshot&, const History&, const NormReport*)> on_sample;
};

struct RunResult {
    StateSnapshot final_state;
    History history;
    std::vector<NormReport> series;
    double dt = 0.0;
    int steps = 0;
};

/// Number of steps and the step size actually used: n = ceil(t_end / dt_max), dt = t_end / n.
std::pair<int, double> plan_steps(double t_end, double dt_max);

/// Fixed-step loop from initial.t to initial.t + t_end.  The step is chosen once
/// from the initial state; each step re-checks the CFL bound and aborts with
/// StabilityError if dt exceeds twice the current bound.
RunResult run_simulation(const StateSnapshot& initial, const Grid& grid, const PhysParams& params, BcMode mode,
                         double t_end, const OutputPolicy& policy = {}, const RunOptions& options = {});

}  // namespace velab
