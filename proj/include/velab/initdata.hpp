/// @file initdata.hpp
/// @brief Constraint-satisfying initial data from an explicit displacement map.
///
/// Phi(x, y) = (x + s a(x, y), y + s b(x, y)) is read as the map from current
/// to reference coordinates.  Setting F = (D Phi)^{-1} and rho = det D Phi gives
///   rho det F = 1                   (pointwise, exactly)
///   div(rho F^T) = div cof(D Phi)^T = 0   (Piola identity, continuum level)
/// and F = I on the wall because a, b and their y-derivatives vanish there.
#pragma once

#include <array>
#include <string_view>

#include "velab/grid.hpp"
#include "velab/state.hpp"

namespace velab {

enum class VelocityInit {
    none,    ///< u = v = 0 (well-prepared)
    bump,    ///< solenoidal: u = d_y psi, v = -d_x psi, psi = A sin(k x') eta(y)
    shear,   ///< tangential shear: u = A sin(k x') (y/l) exp(1 - y/l), v = 0
};

VelocityInit parse_velocity_init(std::string_view s);
std::string_view velocity_init_name(VelocityInit v);

struct DisplacementSpec {
    double amplitude = 0.01;  ///< sigma
    int kx = 1;               ///< x-wavenumber in units of 2 pi / lx
    double y_center = 1.5;
    double y_width = 1.0;
    /// b = b_ratio cos(k x') eta(y); zero keeps f3 = f4 = 0 initially.
    double b_ratio = 0.0;
    VelocityInit velocity = VelocityInit::none;
    double velocity_amplitude = 0.01;
    double velocity_width = 0.5;  ///< l for the shear profile

    void validate() const;
};

/// Compactly supported bump (1 - r^2)^6, r = (y - yc)/w, and its derivatives.
struct BumpValue {
    double val, d1, d2;
};
BumpValue bump_profile(double y, double y_center, double y_width);

struct DisplacementValue {
    std::array<double, 2> phi;                   ///< Phi(x, y)
    std::array<std::array<double, 2>, 2> jac;    ///< jac[r][c] = d Phi_r / d x_c
};

DisplacementValue displacement_map(const DisplacementSpec& spec, double lx, double x, double y);

/// Throws ValidationError on Jacobian degeneracy or if rho or 1 + f4 leaves (1/2, 3/2).
StateSnapshot piola_initial_data(const Grid& grid, const DisplacementSpec& spec);

}  // namespace velab
