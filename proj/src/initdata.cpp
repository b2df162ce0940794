#include "velab/initdata.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "velab/error.hpp"

namespace velab {

VelocityInit parse_velocity_init(std::string_view s) {
    if (s == "none") return VelocityInit::none;
    if (s == "bump") return VelocityInit::bump;
    if (s == "shear") return VelocityInit::shear;
    throw ValidationError("unknown velocity init '" + std::string(s) + "' (none|bump|shear)");
}

std::string_view velocity_init_name(VelocityInit v) {
    switch (v) {
        case VelocityInit::none: return "none";
        case VelocityInit::bump: return "bump";
        case VelocityInit::shear: return "shear";
    }
    return "?";
}

void DisplacementSpec::validate() const {
    if (!(amplitude >= 0.0)) throw ValidationError("amplitude must be >= 0");
    if (!(y_width > 0.0)) throw ValidationError("y_width must be > 0");
    if (!(y_center - y_width >= 0.0)) throw ValidationError("bump must vanish at the wall: y_center - y_width >= 0");
    if (!(velocity_amplitude >= 0.0)) throw ValidationError("velocity_amplitude must be >= 0");
    if (!(velocity_width > 0.0)) throw ValidationError("velocity_width must be > 0");
}

BumpValue bump_profile(double y, double yc, double w) {
    const double r = (y - yc) / w;
    if (std::abs(r) >= 1.0) return {0.0, 0.0, 0.0};
    const double q = 1.0 - r * r;  // eta = q^6
    const double q4 = q * q * q * q;
    const double q5 = q4 * q;
    // d/dy q = -2 r / w
    const double d1 = 6.0 * q5 * (-2.0 * r / w);
    const double d2 = (30.0 * q4 * 4.0 * r * r - 12.0 * q5) / (w * w);
    return {q5 * q, d1, d2};
}

DisplacementValue displacement_map(const DisplacementSpec& spec, double lx, double x, double y) {
    const double k = 2.0 * std::numbers::pi * spec.kx / lx;
    const BumpValue eta = bump_profile(y, spec.y_center, spec.y_width);
    const double s = spec.amplitude;
    const double sn = std::sin(k * x), cs = std::cos(k * x);
    const double a = sn * eta.val, a_x = k * cs * eta.val, a_y = sn * eta.d1;
    const double br = spec.b_ratio;
    const double b = br * cs * eta.val, b_x = -br * k * sn * eta.val, b_y = br * cs * eta.d1;
    DisplacementValue out;
    out.phi = {x + s * a, y + s * b};
    out.jac = {{{1.0 + s * a_x, s * a_y}, {s * b_x, 1.0 + s * b_y}}};
    return out;
}

StateSnapshot piola_initial_data(const Grid& grid, const DisplacementSpec& spec) {
    spec.validate();
    StateSnapshot st = uniform_state(grid);
    const double k = 2.0 * std::numbers::pi * spec.kx / grid.lx;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            const auto d = displacement_map(spec, grid.lx, x, y);
            const double p = d.jac[0][0], q = d.jac[0][1], r = d.jac[1][0], s = d.jac[1][1];
            const double det = p * s - q * r;
            if (!(det > 0.0)) throw ValidationError("piola_initial_data: degenerate displacement Jacobian");
            // F = (D Phi)^{-1}
            const double F11 = s / det, F12 = -q / det, F21 = -r / det, F22 = p / det;
            const double rho = det;
            if (!(rho > 0.5 && rho < 1.5) || !(F22 > 0.5 && F22 < 1.5))
                throw ValidationError("piola_initial_data: amplitude leaves the small-data regime");
            st[Component::rho](i, j) = rho;
            st[Component::f1](i, j) = F11 - 1.0;
            st[Component::f2](i, j) = F12;
            st[Component::f3](i, j) = F21;
            st[Component::f4](i, j) = F22 - 1.0;

            const double A = spec.velocity_amplitude;
            const double sn = std::sin(k * x), cs = std::cos(k * x);
            switch (spec.velocity) {
                case VelocityInit::none: break;
                case VelocityInit::bump: {
                    const BumpValue eta = bump_profile(y, spec.y_center, spec.y_width);
                    st[Component::u](i, j) = A * sn * eta.d1;
                    st[Component::v](i, j) = -A * k * cs * eta.val;
                    break;
                }
                case VelocityInit::shear: {
                    const double l = spec.velocity_width;
                    st[Component::u](i, j) = A * sn * (y / l) * std::exp(1.0 - y / l);
                    break;
                }
            }
        }
    }
    return st;
}

}  // namespace velab
