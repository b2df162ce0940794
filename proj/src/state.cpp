#include "velab/state.hpp"

#include <cmath>
#include <string>

#include "velab/error.hpp"

namespace velab {

std::string_view component_name(Component c) {
    switch (c) {
        case Component::rho: return "rho";
        case Component::u: return "u";
        case Component::v: return "v";
        case Component::f1: return "f1";
        case Component::f2: return "f2";
        case Component::f3: return "f3";
        case Component::f4: return "f4";
    }
    return "?";
}

void PhysParams::validate() const {
    if (!(gamma >= 1.0)) throw ValidationError("gamma must be >= 1");
    if (!(mu > 0.0)) throw ValidationError("mu must be > 0");
    if (!(mu + lambda > 0.0)) throw ValidationError("mu + lambda must be > 0");
    if (!(eps >= 0.0 && eps < 1.0)) throw ValidationError("eps must be in [0, 1)");
    if (!(filter_kappa >= 0.0)) throw ValidationError("filter_kappa must be >= 0");
}

StateSnapshot uniform_state(const Grid& grid) {
    StateSnapshot s;
    for (Component c : kAllComponents) s[c] = grid.constant(equilibrium_value(c));
    s.t = 0.0;
    return s;
}

Field2D pressure(const Field2D& rho, double gamma) {
    Field2D p(rho.nx(), rho.ny());
    for (std::size_t k = 0; k < rho.size(); ++k) {
        if (!(rho[k] > 0.0)) throw ValidationError("pressure: nonpositive density");
        p[k] = gamma == 1.0 ? rho[k] : std::pow(rho[k], gamma);
    }
    return p;
}

StressField elastic_stress(const StateSnapshot& s) {
    const int nx = s.nx(), ny = s.ny();
    StressField t{Field2D(nx, ny), Field2D(nx, ny), Field2D(nx, ny)};
    const auto& r = s.rho();
    for (std::size_t k = 0; k < r.size(); ++k) {
        const double a = 1.0 + s.f1()[k], b = s.f2()[k], c = s.f3()[k], d = 1.0 + s.f4()[k];
        t.xx[k] = r[k] * (a * a + b * b);
        t.xy[k] = r[k] * (a * c + b * d);
        t.yy[k] = r[k] * (c * c + d * d);
    }
    return t;
}

ConstraintResiduals constraint_residuals(const StateSnapshot& s, const Grid& grid) {
    const int nx = s.nx(), ny = s.ny();
    Field2D det(nx, ny), r11(nx, ny), r21(nx, ny), r12(nx, ny), r22(nx, ny);
    for (std::size_t k = 0; k < det.size(); ++k) {
        const double rho = s.rho()[k];
        const double a = 1.0 + s.f1()[k], b = s.f2()[k], c = s.f3()[k], d = 1.0 + s.f4()[k];
        det[k] = rho * (a * d - b * c) - 1.0;
        r11[k] = rho * a;
        r21[k] = rho * c;
        r12[k] = rho * b;
        r22[k] = rho * d;
    }
    ConstraintResiduals out;
    out.det = std::move(det);
    out.piola_x = diff(r11, grid, Axis::x) + diff(r21, grid, Axis::y);
    out.piola_y = diff(r12, grid, Axis::x) + diff(r22, grid, Axis::y);
    return out;
}

Field2D vorticity(const StateSnapshot& s, const Grid& grid) {
    return diff(s.u(), grid, Axis::y) - diff(s.v(), grid, Axis::x);
}

void check_regime(const StateSnapshot& s) {
    for (Component c : kAllComponents) {
        for (double v : s[c].values())
            if (!std::isfinite(v))
                throw RegimeError("non-finite value in " + std::string(component_name(c)), s.t, std::string(component_name(c)));
    }
    for (double v : s.rho().values())
        if (!(v > 0.0)) throw RegimeError("density left the regime (rho <= 0)", s.t, "rho");
    for (double v : s.f4().values())
        if (!(1.0 + v > 0.0)) throw RegimeError("deformation left the regime (1 + f4 <= 0)", s.t, "f4");
}

bool same_shape(const StateSnapshot& s, const Grid& grid) {
    for (const auto& f : s.fields)
        if (!grid.matches(f)) return false;
    return true;
}

}  // namespace velab
