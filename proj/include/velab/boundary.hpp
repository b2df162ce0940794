/// @file boundary.hpp
/// @brief Domain closure: no-slip / no-penetration wall, periodic x, and a
/// truncated far field (zeroth-order extrapolation plus a relaxation sponge).
///
/// No condition is ever imposed on f1..f4 at the wall: with u = v = 0 there
/// the transport equations carry the wall trace along, and f3 stays 0.
#pragma once

#include <functional>
#include <string_view>

#include "velab/dynamics.hpp"
#include "velab/grid.hpp"
#include "velab/state.hpp"

namespace velab {

/// viscous, ns_compare: u = v = 0 on the wall.  ideal: v = 0, plus u = 0
/// unless BoundaryOptions::ideal_slip is set.
enum class BcMode { viscous, ideal, ns_compare };

std::string_view bc_mode_name(BcMode m);
BcMode parse_bc_mode(std::string_view s);

struct BoundaryOptions {
    /// Ideal mode imposes no-penetration only.  This is the compressible Euler
    /// wall; the elastic ideal system carries an incoming shear wave and needs
    /// the tangential condition as well.
    bool ideal_slip = false;
    /// Relaxation rate of the far-field sponge (sponge tendency term).
    double sigma_sponge = 5.0;
    /// Fraction of rows at the top covered by the sponge.
    double sponge_fraction = 0.1;
    /// When set, the top row is overwritten with these values instead of being
    /// extrapolated, and the sponge is skipped.  Used by manufactured-solution runs.
    std::function<double(Component, double t, double x, double y)> prescribed_top;
};

/// Returns a copy of `s` with wall and top rows closed.
StateSnapshot enforce_boundaries(const StateSnapshot& s, const Grid& grid, BcMode mode,
                                 const BoundaryOptions& opts = {});
void enforce_boundaries_inplace(StateSnapshot& s, const Grid& grid, BcMode mode, const BoundaryOptions& opts = {});

/// Sponge weight on row j: 0 below the band, rising quadratically to 1 at y = ly.
double sponge_weight(const Grid& grid, int j, double fraction);

/// Adds -sigma * w(y) * (q - q_eq) to every component.  No-op when
/// opts.prescribed_top is set or sigma_sponge == 0.
void add_sponge(Tendency& tend, const StateSnapshot& s, const Grid& grid, const BoundaryOptions& opts);

struct WallTraces {
    double u_max = 0.0;   ///< max_x |u(x, 0)|
    double f3_max = 0.0;  ///< max_x |f3(x, 0)|
};
WallTraces wall_traces(const StateSnapshot& s);

}  // namespace velab
