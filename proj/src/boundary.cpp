#include "velab/boundary.hpp"

#include <cmath>
#include <string>

#include "velab/error.hpp"

namespace velab {

std::string_view bc_mode_name(BcMode m) {
    switch (m) {
        case BcMode::viscous: return "viscous";
        case BcMode::ideal: return "ideal";
        case BcMode::ns_compare: return "ns_compare";
    }
    return "?";
}

BcMode parse_bc_mode(std::string_view s) {
    if (s == "viscous") return BcMode::viscous;
    if (s == "ideal") return BcMode::ideal;
    if (s == "ns_compare") return BcMode::ns_compare;
    throw ValidationError("unknown boundary mode '" + std::string(s) + "'");
}

void enforce_boundaries_inplace(StateSnapshot& s, const Grid& grid, BcMode mode, const BoundaryOptions& opts) {
    const int nx = grid.nx, top = grid.ny - 1;
    for (int i = 0; i < nx; ++i) {
        s[Component::v](i, 0) = 0.0;
        if (mode != BcMode::ideal || !opts.ideal_slip) s[Component::u](i, 0) = 0.0;
    }
    if (opts.prescribed_top) {
        for (Component c : kAllComponents)
            for (int i = 0; i < nx; ++i) s[c](i, top) = opts.prescribed_top(c, s.t, grid.x(i), grid.y(top));
    } else {
        for (Component c : kAllComponents)
            for (int i = 0; i < nx; ++i) s[c](i, top) = s[c](i, top - 1);
    }
}

StateSnapshot enforce_boundaries(const StateSnapshot& s, const Grid& grid, BcMode mode, const BoundaryOptions& opts) {
    if (!same_shape(s, grid)) throw ValidationError("enforce_boundaries: state does not match grid");
    StateSnapshot out = s;
    enforce_boundaries_inplace(out, grid, mode, opts);
    return out;
}

double sponge_weight(const Grid& grid, int j, double fraction) {
    const double start = (1.0 - fraction) * grid.ly;
    const double y = grid.y(j);
    if (fraction <= 0.0 || y <= start) return 0.0;
    const double s = (y - start) / (grid.ly - start);
    return s * s;
}

void add_sponge(Tendency& tend, const StateSnapshot& s, const Grid& grid, const BoundaryOptions& opts) {
    if (opts.prescribed_top || opts.sigma_sponge <= 0.0) return;
    for (int j = 0; j < grid.ny; ++j) {
        const double w = opts.sigma_sponge * sponge_weight(grid, j, opts.sponge_fraction);
        if (w == 0.0) continue;
        for (Component c : kAllComponents) {
            const double eq = equilibrium_value(c);
            for (int i = 0; i < grid.nx; ++i) tend[c](i, j) -= w * (s[c](i, j) - eq);
        }
    }
}

WallTraces wall_traces(const StateSnapshot& s) {
    return {max_abs_row(s.u(), 0), max_abs_row(s.f3(), 0)};
}

}  // namespace velab
