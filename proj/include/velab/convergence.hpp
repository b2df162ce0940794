/// @file convergence.hpp
/// @brief Manufactured-solution refinement study on nx x (nx+1) grids.
#pragma once

#include <array>
#include <vector>

#include "velab/mms.hpp"
#include "velab/state.hpp"

namespace velab {

struct MmsStudyOptions {
    PhysParams params = [] {
        PhysParams p;
        p.eps = 1e-2;
        return p;
    }();
    double lx = 6.283185307179586;
    double ly = 1.0;
    double t_end = 0.2;
    double cfl = 0.4;
    double amplitude = 0.1;
};

struct MmsLevel {
    int nx = 0, ny = 0;
    double h = 0.0, dt = 0.0;
    int steps = 0;
    std::array<double, kNumComponents> l2_error{};  ///< discrete L2 norm of (numerical - exact) at t_end
};

struct MmsStudy {
    std::vector<MmsLevel> levels;
    /// Least-squares slope of log error against log h per component.
    std::array<double, kNumComponents> order{};
};

/// Viscous wall, exact values on the top row, forcing from mms_forcing.
MmsLevel run_mms_level(int nx, const MmsStudyOptions& opt);
MmsStudy run_mms_study(const std::vector<int>& resolutions, const MmsStudyOptions& opt);

}  // namespace velab
