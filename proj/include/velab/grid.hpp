/// @file grid.hpp
/// @brief Half-plane strip geometry and the spatial / conormal derivative
/// operators built on it.
///
/// The strip is [0, lx) x [0, ly], periodic in x, with the wall at y = 0
/// (row j = 0) and an artificial far-field boundary at y = ly.  Derivatives are
/// second order everywhere: central in the interior, one-sided (three or four
/// point) on the first and last rows.
#pragma once

#include <span>
#include <vector>

#include "velab/field.hpp"

namespace velab {

struct Grid {
    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    std::vector<double> y_coords;  ///< y_coords[0] == 0 exactly
    std::vector<double> phi;       ///< weight_phi(y_coords[j])

    double x(int i) const noexcept { return i * dx; }
    double y(int j) const noexcept { return y_coords[static_cast<std::size_t>(j)]; }
    /// min(dx, dy); the mesh size used by the CFL bound and error tolerances.
    double h() const noexcept { return dx < dy ? dx : dy; }
    Field2D zeros() const { return Field2D(nx, ny); }
    Field2D constant(double c) const { return Field2D(nx, ny, c); }
    bool matches(const Field2D& f) const noexcept { return f.nx() == nx && f.ny() == ny; }
};

Grid build_grid(int nx, int ny, double lx, double ly);

/// phi(y) = y / (1 + y): vanishes at the wall, phi'(0) = 1, tends to 1.
double weight_phi(double y);

enum class Axis { x, y };

/// First derivative along `axis`.  With `conormal` on axis y the result is
/// multiplied by phi(y_j) (Z2 = phi d/dy); on axis x conormal is a no-op (Z1 = d/dx).
Field2D diff(const Field2D& field, const Grid& grid, Axis axis, bool conormal = false);

/// Second derivative along `axis` (compact three-point interior stencil,
/// four-point one-sided on the y boundary rows).
Field2D diff2(const Field2D& field, const Grid& grid, Axis axis);

/// Conormal multi-index alpha = (a0, a1, a2) addressing Z0^a0 Z1^a1 Z2^a2,
/// with Z0 = d/dt, Z1 = d/dx, Z2 = phi(y) d/dy.
struct MultiIndex {
    int a0 = 0;
    int a1 = 0;
    int a2 = 0;
    int order() const noexcept { return a0 + a1 + a2; }
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// All multi-indices with order <= m; a0 is held at 0 unless include_time.
std::vector<MultiIndex> multi_indices_up_to(int m, bool include_time);

/// Backward-difference weights for the `order`-th time derivative at times[last]
/// using the trailing `points` entries of `times`.  Fornberg's recursion, so
/// non-uniform spacings would work; callers enforce uniformity.
std::vector<double> backward_difference_weights(std::span<const double> times, int order, int points);

/// Applies Z^alpha to a time-ordered (oldest first) sequence of same-shape
/// fields and returns the result at the newest time.  One-sided Z0 uses
/// a0 + 2 snapshots when available (second order) and a0 + 1 otherwise.
Field2D apply_conormal_multiindex(std::span<const double> times, std::span<const Field2D> fields,
                                  const Grid& grid, MultiIndex alpha);

/// Relative tolerance on snapshot spacing uniformity.
inline constexpr double kUniformSpacingTol = 1e-12;

/// True when consecutive spacings agree to kUniformSpacingTol relative, plus
/// a few ulps of |t| for the representation error of the time stamps.
bool uniformly_spaced(std::span<const double> times);

}  // namespace velab
