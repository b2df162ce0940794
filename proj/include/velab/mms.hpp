/// @file mms.hpp
/// @brief Manufactured solutions for convergence studies.
///
/// Each component is q = base + amp * sin(w t + pt) * sin(kx x + px) * sin(ky y + py).
/// u, v and f3 use py = 0 so they vanish on the wall; integer multiples of
/// 2 pi / lx keep everything periodic in x.
#pragma once

#include <array>

#include "velab/dynamics.hpp"
#include "velab/grid.hpp"
#include "velab/state.hpp"

namespace velab {

struct Wave {
    double k = 0.0;
    double phase = 0.0;
    double value(double s) const;
    double deriv(double s) const;
    double deriv2(double s) const;
};

struct SeparableMode {
    double base = 0.0;
    double amp = 0.0;
    Wave t, x, y;
};

/// Value and derivatives of one scalar field at a point.
struct PointJet {
    double val = 0, dt = 0, dx = 0, dy = 0, dxx = 0, dyy = 0, dxy = 0;
};

struct ManufacturedSolution {
    std::array<SeparableMode, kNumComponents> modes;

    /// All-trigonometric default used by the convergence study.
    static ManufacturedSolution standard(double lx, double amplitude = 0.1);
    /// The equilibrium (1, 0, I) exactly.
    static ManufacturedSolution equilibrium();

    PointJet evaluate(Component c, double t, double x, double y) const;
    std::array<PointJet, kNumComponents> evaluate_all(double t, double x, double y) const;
    StateSnapshot sample(double t, const Grid& grid) const;
};

/// Continuum right-hand side (the same operator rhs_viscous discretizes),
/// evaluated from exact pointwise jets.
std::array<double, kNumComponents> continuum_rhs(const std::array<PointJet, kNumComponents>& q, const PhysParams& params);

/// exact d/dt minus continuum RHS, evaluated on the grid nodes at time t.
Tendency mms_forcing(const ManufacturedSolution& mms, double t, const Grid& grid, const PhysParams& params);

}  // namespace velab
