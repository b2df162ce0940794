/// @file dynamics.hpp
/// @brief Semi-discrete right-hand sides of the viscous and ideal systems.
///
/// Primitive-variable, non-conservative form:
///   rho_t = -div(rho u)
///   u_t   = -(u.grad)u + [E div(rho F F^T) - grad p + eps mu lap u + eps (mu+lambda) grad div u] / rho
///   F_t   = -(u.grad)F + (grad u) F            (component form below)
///     f1_t = -(u.grad) f1 + (1+f1) u_x + f3 u_y
///     f2_t = -(u.grad) f2 + f2 u_x + (1+f4) u_y
///     f3_t = -(u.grad) f3 + (1+f1) v_x + f3 v_y
///     f4_t = -(u.grad) f4 + f2 v_x + (1+f4) v_y
/// with E = 1 when elastic coupling is on and 0 otherwise.
#pragma once

#include <array>

#include "velab/field.hpp"
#include "velab/grid.hpp"
#include "velab/state.hpp"

namespace velab {

struct Tendency {
    std::array<Field2D, kNumComponents> d;

    Field2D& operator[](Component c) { return d[static_cast<int>(c)]; }
    const Field2D& operator[](Component c) const { return d[static_cast<int>(c)]; }

    static Tendency zeros(const Grid& grid);
    Tendency& operator+=(const Tendency& o);
};

/// Viscous system with viscosities eps*mu, eps*lambda.  OpenMP over rows.
Tendency rhs_viscous(const StateSnapshot& s, const Grid& grid, const PhysParams& params);

/// Ideal system: rhs_viscous with eps = 0, plus the fourth-order filter
/// -kappa (delta_x^4 + delta_y^4) q on every field when params.filter_kappa > 0.
Tendency rhs_ideal(const StateSnapshot& s, const Grid& grid, const PhysParams& params);

/// Adds -kappa (delta_x^4 + delta_y^4) q to each tendency component.
void add_filter(Tendency& tend, const StateSnapshot& s, const Grid& grid, double kappa);

}  // namespace velab
