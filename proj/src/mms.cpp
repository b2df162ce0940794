#include "velab/mms.hpp"

#include <cmath>
#include <numbers>

namespace velab {

double Wave::value(double s) const { return std::sin(k * s + phase); }
double Wave::deriv(double s) const { return k * std::cos(k * s + phase); }
double Wave::deriv2(double s) const { return -k * k * std::sin(k * s + phase); }

ManufacturedSolution ManufacturedSolution::standard(double lx, double amplitude) {
    const double kx = 2.0 * std::numbers::pi / lx;
    const double half_pi = 0.5 * std::numbers::pi;
    const double a = amplitude;
    ManufacturedSolution m;
    // {base, amp, t-wave, x-wave, y-wave}
    m.modes[0] = {1.0, a, {1.0, half_pi}, {kx, 0.3}, {std::numbers::pi, half_pi}};
    m.modes[1] = {0.0, a, {1.0, half_pi}, {kx, half_pi}, {std::numbers::pi, 0.0}};
    m.modes[2] = {0.0, a, {1.0, 0.4}, {kx, 0.0}, {std::numbers::pi, 0.0}};
    m.modes[3] = {0.0, a, {1.0, 1.1}, {kx, half_pi}, {1.0, half_pi}};
    m.modes[4] = {0.0, a, {1.0, half_pi}, {kx, 0.0}, {2.0, 0.3}};
    m.modes[5] = {0.0, a, {1.0, 0.7}, {2.0 * kx, half_pi}, {1.0, 0.0}};
    m.modes[6] = {0.0, a, {1.0, 0.2}, {kx, half_pi}, {1.0, 1.0}};
    return m;
}

ManufacturedSolution ManufacturedSolution::equilibrium() {
    ManufacturedSolution m;
    m.modes[0].base = 1.0;
    return m;
}

PointJet ManufacturedSolution::evaluate(Component c, double t, double x, double y) const {
    const SeparableMode& m = modes[static_cast<int>(c)];
    const double T = m.t.value(t), X = m.x.value(x), Y = m.y.value(y);
    const double Tp = m.t.deriv(t), Xp = m.x.deriv(x), Yp = m.y.deriv(y);
    PointJet j;
    j.val = m.base + m.amp * T * X * Y;
    j.dt = m.amp * Tp * X * Y;
    j.dx = m.amp * T * Xp * Y;
    j.dy = m.amp * T * X * Yp;
    j.dxx = m.amp * T * m.x.deriv2(x) * Y;
    j.dyy = m.amp * T * X * m.y.deriv2(y);
    j.dxy = m.amp * T * Xp * Yp;
    return j;
}

std::array<PointJet, kNumComponents> ManufacturedSolution::evaluate_all(double t, double x, double y) const {
    std::array<PointJet, kNumComponents> q;
    for (Component c : kAllComponents) q[static_cast<int>(c)] = evaluate(c, t, x, y);
    return q;
}

StateSnapshot ManufacturedSolution::sample(double t, const Grid& grid) const {
    StateSnapshot s = uniform_state(grid);
    for (Component c : kAllComponents)
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i) s[c](i, j) = evaluate(c, t, grid.x(i), grid.y(j)).val;
    s.t = t;
    return s;
}

std::array<double, kNumComponents> continuum_rhs(const std::array<PointJet, kNumComponents>& q, const PhysParams& prm) {
    const PointJet &r = q[0], &u = q[1], &v = q[2], &f1 = q[3], &f2 = q[4], &f3 = q[5], &f4 = q[6];
    const double a = 1.0 + f1.val, b = f2.val, c = f3.val, d = 1.0 + f4.val;

    const double dtxx_dx = r.dx * (a * a + b * b) + r.val * (2.0 * a * f1.dx + 2.0 * b * f2.dx);
    const double dtxy_dx = r.dx * (a * c + b * d) + r.val * (f1.dx * c + a * f3.dx + f2.dx * d + b * f4.dx);
    const double dtxy_dy = r.dy * (a * c + b * d) + r.val * (f1.dy * c + a * f3.dy + f2.dy * d + b * f4.dy);
    const double dtyy_dy = r.dy * (c * c + d * d) + r.val * (2.0 * c * f3.dy + 2.0 * d * f4.dy);
    const double dp = prm.gamma * std::pow(r.val, prm.gamma - 1.0);
    const double e = prm.elastic_coupling ? 1.0 : 0.0;
    const double visc = prm.eps * prm.mu, bulk = prm.eps * (prm.mu + prm.lambda);

    std::array<double, kNumComponents> out{};
    out[0] = -(r.dx * u.val + r.val * u.dx + r.dy * v.val + r.val * v.dy);
    out[1] = -(u.val * u.dx + v.val * u.dy) +
             (e * (dtxx_dx + dtxy_dy) - dp * r.dx + visc * (u.dxx + u.dyy) + bulk * (u.dxx + v.dxy)) / r.val;
    out[2] = -(u.val * v.dx + v.val * v.dy) +
             (e * (dtxy_dx + dtyy_dy) - dp * r.dy + visc * (v.dxx + v.dyy) + bulk * (u.dxy + v.dyy)) / r.val;
    out[3] = -(u.val * f1.dx + v.val * f1.dy) + a * u.dx + c * u.dy;
    out[4] = -(u.val * f2.dx + v.val * f2.dy) + b * u.dx + d * u.dy;
    out[5] = -(u.val * f3.dx + v.val * f3.dy) + a * v.dx + c * v.dy;
    out[6] = -(u.val * f4.dx + v.val * f4.dy) + b * v.dx + d * v.dy;
    return out;
}

Tendency mms_forcing(const ManufacturedSolution& mms, double t, const Grid& grid, const PhysParams& params) {
    Tendency f = Tendency::zeros(grid);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const auto q = mms.evaluate_all(t, grid.x(i), grid.y(j));
            const auto rhs = continuum_rhs(q, params);
            for (int c = 0; c < kNumComponents; ++c) f.d[c](i, j) = q[c].dt - rhs[c];
        }
    }
    return f;
}

}  // namespace velab
