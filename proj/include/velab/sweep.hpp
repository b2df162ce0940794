/// @file sweep.hpp
/// @brief Vanishing-viscosity sweeps against the eps = 0 reference, and the
/// coupled / uncoupled boundary-layer contrast.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "velab/boundary.hpp"
#include "velab/grid.hpp"
#include "velab/initdata.hpp"
#include "velab/state.hpp"

namespace velab {

struct SweepPlan {
    std::vector<double> eps_list{1e-2, 5e-3, 2.5e-3, 1.25e-3};
    int nx = 64, ny = 65;
    double lx = 6.283185307179586, ly = 6.283185307179586;
    PhysParams params;  ///< eps is overwritten per member
    DisplacementSpec init;
    double t_end = 1.0;
    double cfl = 0.4;
    int sample_interval = 5;
    int m = 1;
    int z0_depth = 3;
    BoundaryOptions bc;

    /// eps_list nonempty, strictly decreasing, inside (0, 1); other fields positive.
    void validate() const;
};

struct SweepMember {
    double eps = 0.0;
    bool ok = false;
    std::string failure;
    double err_sup = 0.0;      ///< sup_t max over fields of |U^eps - U^0|
    double dy_err_sup = 0.0;   ///< sup_t max over fields of |d_y(U^eps - U^0)|
    double peak_wall_layer = 0.0;
    double peak_nm = 0.0;
    double peak_q = 0.0;
};

struct SweepReport {
    std::vector<SweepMember> members;  ///< aligned with eps_list
    bool elastic_coupling = true;
    std::string reference_mode;
    double reference_wall_layer = 0.0;  ///< peak indicator of the eps = 0 run
    double reference_nm = 0.0;
    int reference_samples = 0;
    double dt = 0.0;
    int steps = 0;
    int sample_interval = 0;
    int nx = 0, ny = 0;
    double lx = 0.0, ly = 0.0;
    double amplitude = 0.0, filter_kappa = 0.0;
    /// Least-squares log-log slopes over the successful members (nullopt with fewer than two).
    std::optional<double> err_rate, dy_err_rate, wall_layer_rate;
    bool complete() const;
};

/// Least-squares slope of log(err) against log(eps).  Needs >= 2 pairs, all positive.
double fit_rate(const std::vector<std::pair<double, double>>& pairs);

/// Builds the initial state of a plan (F = I and rho = 1 when coupling is off).
StateSnapshot sweep_initial_state(const SweepPlan& plan, const Grid& grid);

/// Ideal reference once, then each eps member on the same step and sample
/// lattice.  Member failures are recorded, not rethrown.
SweepReport run_inviscid_limit_sweep(const SweepPlan& plan);

struct NsComparison {
    SweepReport coupled, uncoupled;
    /// Minus the fitted slope of the peak wall indicator against eps: the rate
    /// at which the wall gradient grows as eps -> 0.
    std::optional<double> layer_exponent_on, layer_exponent_off;
};

/// Runs the plan with elastic coupling on and off.  Requires nonzero initial shear.
NsComparison ns_comparison(const SweepPlan& plan);

}  // namespace velab
