#include "velab/grid.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "velab/error.hpp"
#include "velab/stencil.hpp"

namespace velab {

Grid build_grid(int nx, int ny, double lx, double ly) {
    if (!(lx > 0.0) || !(ly > 0.0)) throw ValidationError("grid: nonpositive extent");
    if (nx < 4 || ny < 4) throw ValidationError("grid: nx and ny must be >= 4 (stencil width)");
    Grid g;
    g.nx = nx;
    g.ny = ny;
    g.lx = lx;
    g.ly = ly;
    g.dx = lx / nx;
    g.dy = ly / (ny - 1);
    g.y_coords.resize(static_cast<std::size_t>(ny));
    g.phi.resize(static_cast<std::size_t>(ny));
    for (int j = 0; j < ny; ++j) {
        g.y_coords[j] = j * g.dy;
        g.phi[j] = weight_phi(g.y_coords[j]);
    }
    return g;
}

double weight_phi(double y) {
    if (y < 0.0) throw ValidationError("weight_phi: negative y");
    return y / (1.0 + y);
}

Field2D diff(const Field2D& field, const Grid& grid, Axis axis, bool conormal) {
    if (!grid.matches(field)) throw ValidationError("diff: field does not match grid shape");
    const int nx = grid.nx, ny = grid.ny;
    Field2D out(nx, ny);
    const double* f = field.data();
    double* o = out.data();
    if (axis == Axis::x) {
        const double inv = 0.5 / grid.dx;
#pragma omp parallel for schedule(static)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) o[static_cast<long>(j) * nx + i] = stencil::ddx(f, nx, i, j, inv);
    } else {
        const double inv = 0.5 / grid.dy;
#pragma omp parallel for schedule(static)
        for (int j = 0; j < ny; ++j) {
            const double w = conormal ? grid.phi[j] : 1.0;
            for (int i = 0; i < nx; ++i) o[static_cast<long>(j) * nx + i] = w * stencil::ddy(f, nx, ny, i, j, inv);
        }
    }
    return out;
}

Field2D diff2(const Field2D& field, const Grid& grid, Axis axis) {
    if (!grid.matches(field)) throw ValidationError("diff2: field does not match grid shape");
    const int nx = grid.nx, ny = grid.ny;
    Field2D out(nx, ny);
    const double* f = field.data();
    double* o = out.data();
    if (axis == Axis::x) {
        const double inv = 1.0 / (grid.dx * grid.dx);
#pragma omp parallel for schedule(static)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) o[static_cast<long>(j) * nx + i] = stencil::d2x(f, nx, i, j, inv);
    } else {
        const double inv = 1.0 / (grid.dy * grid.dy);
#pragma omp parallel for schedule(static)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) o[static_cast<long>(j) * nx + i] = stencil::d2y(f, nx, ny, i, j, inv);
    }
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(int m, bool include_time) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= m; ++k)
        for (int a0 = include_time ? k : 0; a0 >= 0; --a0)
            for (int a1 = k - a0; a1 >= 0; --a1) out.push_back({a0, a1, k - a0 - a1});
    return out;
}

std::vector<double> backward_difference_weights(std::span<const double> times, int order, int points) {
    if (points < order + 1 || static_cast<std::size_t>(points) > times.size())
        throw ValidationError("backward_difference_weights: need at least order+1 points");
    // Nodes ordered newest first: z_k = times[last - k], expansion point z_0.
    const std::size_t last = times.size() - 1;
    const double t0 = times[last];
    const int n = points - 1;
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n + 1), std::vector<double>(static_cast<std::size_t>(order + 1), 0.0));
    auto z = [&](int k) { return times[last - static_cast<std::size_t>(k)]; };
    double c1 = 1.0;
    double c4 = z(0) - t0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = z(i) - t0;
        for (int j = 0; j < i; ++j) {
            const double c3 = z(i) - z(j);
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<std::size_t>(points));
    for (int k = 0; k <= n; ++k) w[k] = c[k][order];
    return w;  // w[k] multiplies the field at times[last - k]
}

bool uniformly_spaced(std::span<const double> times) {
    if (times.size() < 3) return true;
    const double ref = times[1] - times[0];
    for (std::size_t k = 2; k < times.size(); ++k) {
        const double slack = kUniformSpacingTol * std::abs(ref) + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(times[k]);
        if (std::abs((times[k] - times[k - 1]) - ref) > slack) return false;
    }
    return true;
}

Field2D apply_conormal_multiindex(std::span<const double> times, std::span<const Field2D> fields,
                                  const Grid& grid, MultiIndex alpha) {
    if (alpha.a0 < 0 || alpha.a1 < 0 || alpha.a2 < 0) throw ValidationError("multi-index entries must be >= 0");
    if (times.size() != fields.size() || fields.empty()) throw ValidationError("history times/fields mismatch or empty");
    if (fields.size() < static_cast<std::size_t>(alpha.a0 + 1))
        throw ValidationError("insufficient history depth for a0 = " + std::to_string(alpha.a0));

    const int points = std::min<int>(static_cast<int>(fields.size()), alpha.a0 == 0 ? 1 : alpha.a0 + 2);
    const std::size_t first = fields.size() - static_cast<std::size_t>(points);
    if (points >= 2) {
        const auto window = times.subspan(first);
        if (!(window[1] > window[0])) throw ValidationError("snapshot times must be strictly increasing");
        if (!uniformly_spaced(window)) throw ValidationError("non-uniform snapshot spacing");
    }

    auto spatial = [&](const Field2D& f) {
        Field2D g = f;
        for (int k = 0; k < alpha.a1; ++k) g = diff(g, grid, Axis::x);
        for (int k = 0; k < alpha.a2; ++k) g = diff(g, grid, Axis::y, true);
        return g;
    };

    if (alpha.a0 == 0) return spatial(fields.back());

    const auto w = backward_difference_weights(times.subspan(first), alpha.a0, points);
    Field2D out = grid.zeros();
    for (int k = 0; k < points; ++k) {
        Field2D g = spatial(fields[fields.size() - 1 - static_cast<std::size_t>(k)]);
        for (std::size_t q = 0; q < out.size(); ++q) out[q] += w[k] * g[q];
    }
    return out;
}

}  // namespace velab
