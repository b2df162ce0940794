#include "velab/dynamics.hpp"

#include <cmath>

#include "velab/error.hpp"
#include "velab/stencil.hpp"

namespace velab {

Tendency Tendency::zeros(const Grid& grid) {
    Tendency t;
    for (auto& f : t.d) f = grid.zeros();
    return t;
}

Tendency& Tendency::operator+=(const Tendency& o) {
    for (int c = 0; c < kNumComponents; ++c) d[c] += o.d[c];
    return *this;
}

namespace {

struct Aux {
    Field2D mx, my, p, txx, txy, tyy;
};

Aux build_aux(const StateSnapshot& s, const PhysParams& params) {
    const int nx = s.nx(), ny = s.ny();
    Aux a{Field2D(nx, ny), Field2D(nx, ny), Field2D(nx, ny), Field2D(nx, ny), Field2D(nx, ny), Field2D(nx, ny)};
    const long n = static_cast<long>(s.rho().size());
    const double* rho = s.rho().data();
    const double* u = s.u().data();
    const double* v = s.v().data();
    const double* f1 = s.f1().data();
    const double* f2 = s.f2().data();
    const double* f3 = s.f3().data();
    const double* f4 = s.f4().data();
    const double gamma = params.gamma;
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n; ++k) {
        const double r = rho[k];
        const double fa = 1.0 + f1[k], fb = f2[k], fc = f3[k], fd = 1.0 + f4[k];
        a.mx[k] = r * u[k];
        a.my[k] = r * v[k];
        a.p[k] = gamma == 1.0 ? r : std::pow(r, gamma);
        a.txx[k] = r * (fa * fa + fb * fb);
        a.txy[k] = r * (fa * fc + fb * fd);
        a.tyy[k] = r * (fc * fc + fd * fd);
    }
    return a;
}

}  // namespace

Tendency rhs_viscous(const StateSnapshot& s, const Grid& grid, const PhysParams& params) {
    if (!same_shape(s, grid)) throw ValidationError("rhs: state does not match grid");
    check_regime(s);
    const int nx = grid.nx, ny = grid.ny;
    const Aux aux = build_aux(s, params);
    Tendency out = Tendency::zeros(grid);

    const double ix = 0.5 / grid.dx, iy = 0.5 / grid.dy;
    const double ixx = 1.0 / (grid.dx * grid.dx), iyy = 1.0 / (grid.dy * grid.dy);
    const double visc = params.eps * params.mu;
    const double bulk = params.eps * (params.mu + params.lambda);
    const double elastic = params.elastic_coupling ? 1.0 : 0.0;

    const double* rho = s.rho().data();
    const double* u = s.u().data();
    const double* v = s.v().data();
    const double* f1 = s.f1().data();
    const double* f2 = s.f2().data();
    const double* f3 = s.f3().data();
    const double* f4 = s.f4().data();
    double* d_rho = out[Component::rho].data();
    double* d_u = out[Component::u].data();
    double* d_v = out[Component::v].data();
    double* d_f1 = out[Component::f1].data();
    double* d_f2 = out[Component::f2].data();
    double* d_f3 = out[Component::f3].data();
    double* d_f4 = out[Component::f4].data();

    using namespace stencil;
#pragma omp parallel for schedule(static)
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const long k = static_cast<long>(j) * nx + i;
            const double ux = ddx(u, nx, i, j, ix), uy = ddy(u, nx, ny, i, j, iy);
            const double vx = ddx(v, nx, i, j, ix), vy = ddy(v, nx, ny, i, j, iy);
            const double uk = u[k], vk = v[k], r = rho[k];

            d_rho[k] = -(ddx(aux.mx.data(), nx, i, j, ix) + ddy(aux.my.data(), nx, ny, i, j, iy));

            const int ip = wrap(i + 1, nx), im = wrap(i - 1, nx);
            const double uxy = (ddy(u, nx, ny, ip, j, iy) - ddy(u, nx, ny, im, j, iy)) * ix;
            const double vxy = (ddy(v, nx, ny, ip, j, iy) - ddy(v, nx, ny, im, j, iy)) * ix;
            const double uxx = d2x(u, nx, i, j, ixx), uyy = d2y(u, nx, ny, i, j, iyy);
            const double vxx = d2x(v, nx, i, j, ixx), vyy = d2y(v, nx, ny, i, j, iyy);

            const double div_tau_x = ddx(aux.txx.data(), nx, i, j, ix) + ddy(aux.txy.data(), nx, ny, i, j, iy);
            const double div_tau_y = ddx(aux.txy.data(), nx, i, j, ix) + ddy(aux.tyy.data(), nx, ny, i, j, iy);
            const double px = ddx(aux.p.data(), nx, i, j, ix), py = ddy(aux.p.data(), nx, ny, i, j, iy);

            d_u[k] = -(uk * ux + vk * uy) +
                     (elastic * div_tau_x - px + visc * (uxx + uyy) + bulk * (uxx + vxy)) / r;
            d_v[k] = -(uk * vx + vk * vy) +
                     (elastic * div_tau_y - py + visc * (vxx + vyy) + bulk * (uxy + vyy)) / r;

            const double a = 1.0 + f1[k], b = f2[k], c = f3[k], d = 1.0 + f4[k];
            d_f1[k] = -(uk * ddx(f1, nx, i, j, ix) + vk * ddy(f1, nx, ny, i, j, iy)) + a * ux + c * uy;
            d_f2[k] = -(uk * ddx(f2, nx, i, j, ix) + vk * ddy(f2, nx, ny, i, j, iy)) + b * ux + d * uy;
            d_f3[k] = -(uk * ddx(f3, nx, i, j, ix) + vk * ddy(f3, nx, ny, i, j, iy)) + a * vx + c * vy;
            d_f4[k] = -(uk * ddx(f4, nx, i, j, ix) + vk * ddy(f4, nx, ny, i, j, iy)) + b * vx + d * vy;
        }
    }
    return out;
}

void add_filter(Tendency& tend, const StateSnapshot& s, const Grid& grid, double kappa) {
    if (kappa <= 0.0) return;
    const int nx = grid.nx, ny = grid.ny;
    for (Component c : kAllComponents) {
        const double* q = s[c].data();
        double* d = tend[c].data();
#pragma omp parallel for schedule(static)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                d[static_cast<long>(j) * nx + i] -=
                    kappa * (stencil::delta4x(q, nx, i, j) + stencil::delta4y(q, nx, ny, i, j));
    }
}

Tendency rhs_ideal(const StateSnapshot& s, const Grid& grid, const PhysParams& params) {
    PhysParams ideal = params;
    ideal.eps = 0.0;
    Tendency t = rhs_viscous(s, grid, ideal);
    add_filter(t, s, grid, params.filter_kappa);
    return t;
}

}  // namespace velab
