/// @file reference.hpp
/// @brief Serial reference implementations of the parallel kernels.
///
/// Written as whole-field compositions with their own index arithmetic.
/// Tests pin the OpenMP kernels against these; the benchmark compares them.
#pragma once

#include "velab/dynamics.hpp"
#include "velab/grid.hpp"
#include "velab/state.hpp"

namespace velab::reference {

Field2D diff(const Field2D& f, const Grid& grid, Axis axis, bool conormal = false);
Field2D diff2(const Field2D& f, const Grid& grid, Axis axis);
Tendency rhs_viscous(const StateSnapshot& s, const Grid& grid, const PhysParams& params);
/// Trapezoid-in-y, uniform-in-x discrete L2 norm squared, accumulated serially.
double l2_norm_sq(const Field2D& f, const Grid& grid);

}  // namespace velab::reference
