/// @file stencil.hpp
/// @brief Pointwise second-order stencils shared by the OpenMP kernels and the
/// serial reference path.  `f` is row-major with row length nx.
#pragma once

namespace velab::stencil {

inline int wrap(int i, int nx) noexcept { return i < 0 ? i + nx : (i >= nx ? i - nx : i); }

inline double ddx(const double* f, int nx, int i, int j, double inv2dx) noexcept {
    const double* r = f + static_cast<long>(j) * nx;
    return (r[wrap(i + 1, nx)] - r[wrap(i - 1, nx)]) * inv2dx;
}

inline double ddy(const double* f, int nx, int ny, int i, int j, double inv2dy) noexcept {
    auto at = [&](int jj) { return f[static_cast<long>(jj) * nx + i]; };
    if (j == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) * inv2dy;
    if (j == ny - 1) return (3.0 * at(ny - 1) - 4.0 * at(ny - 2) + at(ny - 3)) * inv2dy;
    return (at(j + 1) - at(j - 1)) * inv2dy;
}

inline double d2x(const double* f, int nx, int i, int j, double invdx2) noexcept {
    const double* r = f + static_cast<long>(j) * nx;
    return (r[wrap(i + 1, nx)] - 2.0 * r[i] + r[wrap(i - 1, nx)]) * invdx2;
}

inline double d2y(const double* f, int nx, int ny, int i, int j, double invdy2) noexcept {
    auto at = [&](int jj) { return f[static_cast<long>(jj) * nx + i]; };
    if (j == 0) return (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) * invdy2;
    if (j == ny - 1) return (2.0 * at(ny - 1) - 5.0 * at(ny - 2) + 4.0 * at(ny - 3) - at(ny - 4)) * invdy2;
    return (at(j + 1) - 2.0 * at(j) + at(j - 1)) * invdy2;
}

/// Undivided fourth differences (h^4 d^4/dx^4 and h^4 d^4/dy^4).  The y
/// version is zero on the two rows nearest each boundary.
inline double delta4x(const double* f, int nx, int i, int j) noexcept {
    const double* r = f + static_cast<long>(j) * nx;
    return r[wrap(i - 2, nx)] - 4.0 * r[wrap(i - 1, nx)] + 6.0 * r[i] - 4.0 * r[wrap(i + 1, nx)] + r[wrap(i + 2, nx)];
}

inline double delta4y(const double* f, int nx, int ny, int i, int j) noexcept {
    if (j < 2 || j > ny - 3) return 0.0;
    auto at = [&](int jj) { return f[static_cast<long>(jj) * nx + i]; };
    return at(j - 2) - 4.0 * at(j - 1) + 6.0 * at(j) - 4.0 * at(j + 1) + at(j + 2);
}

}  // namespace velab::stencil
