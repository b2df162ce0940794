#include "velab/reference.hpp"

#include <cmath>

namespace velab::reference {

Field2D diff(const Field2D& f, const Grid& g, Axis axis, bool conormal) {
    Field2D out(g.nx, g.ny);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double d;
            if (axis == Axis::x) {
                const int ip = (i + 1) % g.nx, im = (i + g.nx - 1) % g.nx;
                d = (f(ip, j) - f(im, j)) / (2.0 * g.dx);
            } else {
                if (j == 0)
                    d = (-3.0 * f(i, 0) + 4.0 * f(i, 1) - f(i, 2)) / (2.0 * g.dy);
                else if (j == g.ny - 1)
                    d = (3.0 * f(i, j) - 4.0 * f(i, j - 1) + f(i, j - 2)) / (2.0 * g.dy);
                else
                    d = (f(i, j + 1) - f(i, j - 1)) / (2.0 * g.dy);
                if (conormal) d *= g.y(j) / (1.0 + g.y(j));
            }
            out(i, j) = d;
        }
    }
    return out;
}

Field2D diff2(const Field2D& f, const Grid& g, Axis axis) {
    Field2D out(g.nx, g.ny);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            if (axis == Axis::x) {
                const int ip = (i + 1) % g.nx, im = (i + g.nx - 1) % g.nx;
                out(i, j) = (f(ip, j) - 2.0 * f(i, j) + f(im, j)) / (g.dx * g.dx);
            } else if (j == 0) {
                out(i, j) = (2.0 * f(i, 0) - 5.0 * f(i, 1) + 4.0 * f(i, 2) - f(i, 3)) / (g.dy * g.dy);
            } else if (j == g.ny - 1) {
                out(i, j) = (2.0 * f(i, j) - 5.0 * f(i, j - 1) + 4.0 * f(i, j - 2) - f(i, j - 3)) / (g.dy * g.dy);
            } else {
                out(i, j) = (f(i, j + 1) - 2.0 * f(i, j) + f(i, j - 1)) / (g.dy * g.dy);
            }
        }
    }
    return out;
}

Tendency rhs_viscous(const StateSnapshot& s, const Grid& g, const PhysParams& prm) {
    const std::size_t n = s.rho().size();
    Field2D mx(g.nx, g.ny), my(g.nx, g.ny), p(g.nx, g.ny), txx(g.nx, g.ny), txy(g.nx, g.ny), tyy(g.nx, g.ny);
    for (std::size_t k = 0; k < n; ++k) {
        const double r = s.rho()[k];
        const double a = 1.0 + s.f1()[k], b = s.f2()[k], c = s.f3()[k], d = 1.0 + s.f4()[k];
        mx[k] = r * s.u()[k];
        my[k] = r * s.v()[k];
        p[k] = std::pow(r, prm.gamma);
        txx[k] = r * (a * a + b * b);
        txy[k] = r * (a * c + b * d);
        tyy[k] = r * (c * c + d * d);
    }
    const Field2D ux = reference::diff(s.u(), g, Axis::x), uy = reference::diff(s.u(), g, Axis::y);
    const Field2D vx = reference::diff(s.v(), g, Axis::x), vy = reference::diff(s.v(), g, Axis::y);
    const Field2D uxy = reference::diff(uy, g, Axis::x), vxy = reference::diff(vy, g, Axis::x);
    const Field2D lap_u = reference::diff2(s.u(), g, Axis::x) + reference::diff2(s.u(), g, Axis::y);
    const Field2D lap_v = reference::diff2(s.v(), g, Axis::x) + reference::diff2(s.v(), g, Axis::y);
    const Field2D uxx = reference::diff2(s.u(), g, Axis::x), vyy = reference::diff2(s.v(), g, Axis::y);
    const Field2D div_m = reference::diff(mx, g, Axis::x) + reference::diff(my, g, Axis::y);
    const Field2D dtx = reference::diff(txx, g, Axis::x) + reference::diff(txy, g, Axis::y);
    const Field2D dty = reference::diff(txy, g, Axis::x) + reference::diff(tyy, g, Axis::y);
    const Field2D px = reference::diff(p, g, Axis::x), py = reference::diff(p, g, Axis::y);

    const double e = prm.elastic_coupling ? 1.0 : 0.0;
    const double visc = prm.eps * prm.mu, bulk = prm.eps * (prm.mu + prm.lambda);

    Tendency out = Tendency::zeros(g);
    for (Component c : {Component::f1, Component::f2, Component::f3, Component::f4}) {
        const Field2D cx = reference::diff(s[c], g, Axis::x), cy = reference::diff(s[c], g, Axis::y);
        for (std::size_t k = 0; k < n; ++k) out[c][k] = -(s.u()[k] * cx[k] + s.v()[k] * cy[k]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double r = s.rho()[k], u = s.u()[k], v = s.v()[k];
        const double a = 1.0 + s.f1()[k], b = s.f2()[k], c = s.f3()[k], d = 1.0 + s.f4()[k];
        out[Component::rho][k] = -div_m[k];
        out[Component::u][k] = -(u * ux[k] + v * uy[k]) + (e * dtx[k] - px[k] + visc * lap_u[k] + bulk * (uxx[k] + vxy[k])) / r;
        out[Component::v][k] = -(u * vx[k] + v * vy[k]) + (e * dty[k] - py[k] + visc * lap_v[k] + bulk * (uxy[k] + vyy[k])) / r;
        out[Component::f1][k] += a * ux[k] + c * uy[k];
        out[Component::f2][k] += b * ux[k] + d * uy[k];
        out[Component::f3][k] += a * vx[k] + c * vy[k];
        out[Component::f4][k] += b * vx[k] + d * vy[k];
    }
    return out;
}

double l2_norm_sq(const Field2D& f, const Grid& g) {
    double total = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        const double wy = (j == 0 || j == g.ny - 1) ? 0.5 * g.dy : g.dy;
        for (int i = 0; i < g.nx; ++i) total += f(i, j) * f(i, j) * wy * g.dx;
    }
    return total;
}

}  // namespace velab::reference
