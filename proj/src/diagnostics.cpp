#include "velab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "velab/error.hpp"

namespace velab {

FieldSelector select(Component c) {
    return [c](const StateSnapshot& s) { return s[c]; };
}

FieldSelector select_perturbation(Component c) {
    return [c](const StateSnapshot& s) {
        Field2D f = s[c];
        const double eq = equilibrium_value(c);
        if (eq != 0.0)
            for (std::size_t k = 0; k < f.size(); ++k) f[k] -= eq;
        return f;
    };
}

FieldSelector select_normal_derivative(Component c, int order, const Grid& grid) {
    if (order < 1 || order > 3) throw ValidationError("normal derivative order must be 1..3");
    return [c, order, grid](const StateSnapshot& s) {
        switch (order) {
            case 1: return diff(s[c], grid, Axis::y);
            case 2: return diff2(s[c], grid, Axis::y);
            default: return diff(diff2(s[c], grid, Axis::y), grid, Axis::y);
        }
    };
}

FieldSelector select_gradient(Component c, Axis axis, const Grid& grid) {
    return [c, axis, grid](const StateSnapshot& s) { return diff(s[c], grid, axis); };
}

double l2_norm_sq(const Field2D& f, const Grid& grid) {
    if (!grid.matches(f)) throw ValidationError("l2_norm_sq: field does not match grid");
    const int nx = grid.nx, ny = grid.ny;
    std::vector<double> rows(static_cast<std::size_t>(ny), 0.0);
    const double* d = f.data();
#pragma omp parallel for schedule(static)
    for (int j = 0; j < ny; ++j) {
        double acc = 0.0;
        for (int i = 0; i < nx; ++i) {
            const double v = d[static_cast<long>(j) * nx + i];
            acc += v * v;
        }
        rows[j] = acc;
    }
    double total = 0.0;
    for (int j = 0; j < ny; ++j) total += rows[j] * ((j == 0 || j == ny - 1) ? 0.5 * grid.dy : grid.dy);
    return total * grid.dx;
}

std::vector<double> conormal_norm_sq_by_order(const History& history, const Grid& grid, const FieldSelector& sel,
                                              int m, bool include_time) {
    if (history.empty()) throw ValidationError("conormal norm: empty history");
    if (m < 0) throw ValidationError("conormal norm: m must be >= 0");
    if (include_time && history.size() < static_cast<std::size_t>(m + 1))
        throw ValidationError("conormal norm: insufficient history for time derivatives of order " + std::to_string(m));

    std::vector<double> times;
    std::vector<Field2D> fields;
    if (include_time) {
        times = history.times();
        for (std::size_t k = 0; k < history.size(); ++k) fields.push_back(sel(history[k]));
    } else {
        times = {history.newest().t};
        fields.push_back(sel(history.newest()));
    }

    std::vector<double> by_order(static_cast<std::size_t>(m + 1), 0.0);
    for (const MultiIndex& a : multi_indices_up_to(m, include_time))
        by_order[a.order()] += l2_norm_sq(apply_conormal_multiindex(times, fields, grid, a), grid);
    return by_order;
}

double conormal_norm(const History& history, const Grid& grid, const FieldSelector& sel, int m, bool include_time) {
    const auto parts = conormal_norm_sq_by_order(history, grid, sel, m, include_time);
    double total = 0.0;
    for (double p : parts) total += p;
    return std::sqrt(total);
}

namespace {

/// Sum over |alpha| <= 1 of ||Z^alpha f||_inf at the newest snapshot.
double w1inf(const std::vector<double>& times, const std::vector<Field2D>& fields, const Grid& grid, bool with_time) {
    double total = 0.0;
    for (const MultiIndex& a : multi_indices_up_to(1, with_time))
        total += max_abs(apply_conormal_multiindex(times, fields, grid, a));
    return total;
}

double q_from_history(const History& h, const Grid& grid, double gamma) {
    const bool with_time = h.size() >= 2;
    std::vector<double> times;
    std::size_t first = h.size() - 1;
    if (with_time) first = 0;
    for (std::size_t k = first; k < h.size(); ++k) times.push_back(h[k].t);

    auto gather = [&](const FieldSelector& sel) {
        std::vector<Field2D> out;
        for (std::size_t k = first; k < h.size(); ++k) out.push_back(sel(h[k]));
        return out;
    };

    std::vector<FieldSelector> base;
    base.push_back([gamma](const StateSnapshot& s) {
        Field2D p = pressure(s.rho(), gamma);
        for (std::size_t k = 0; k < p.size(); ++k) p[k] -= 1.0;
        return p;
    });
    for (Component c : {Component::u, Component::v, Component::f1, Component::f3, Component::f2, Component::f4})
        base.push_back(select(c));

    double total = 0.0;
    for (const auto& sel : base) {
        const auto f = gather(sel);
        total += w1inf(times, f, grid, with_time);
        for (Axis ax : {Axis::x, Axis::y}) {
            std::vector<Field2D> g;
            for (const auto& fi : f) g.push_back(diff(fi, grid, ax));
            total += w1inf(times, g, grid, with_time);
        }
    }
    return total;
}

}  // namespace

double q_instant(const History& history, const Grid& grid, double gamma) {
    if (history.empty()) throw ValidationError("q_norm: empty history");
    return q_from_history(history, grid, gamma);
}

double q_norm(const History& history, const Grid& grid, double gamma) {
    if (history.empty()) throw ValidationError("q_norm: empty history");
    double sup = 0.0;
    for (std::size_t k = 1; k <= history.size(); ++k) {
        History prefix(history.capacity());
        for (std::size_t q = 0; q < k; ++q) prefix.push(history[q]);
        sup = std::max(sup, q_from_history(prefix, grid, gamma));
    }
    return sup;
}

std::optional<TransportRates> rates_from_history(const History& history, const Grid&) {
    if (history.size() < 3) return std::nullopt;
    const History h = history.tail(4);
    const auto times = h.times();
    const int points = static_cast<int>(h.size());
    const auto w = backward_difference_weights(times, 1, points);
    auto rate = [&](Component c) {
        Field2D out(h[0][c].nx(), h[0][c].ny());
        for (int k = 0; k < points; ++k) {
            const Field2D& f = h[h.size() - 1 - static_cast<std::size_t>(k)][c];
            for (std::size_t q = 0; q < out.size(); ++q) out[q] += w[k] * f[q];
        }
        return out;
    };
    return TransportRates{rate(Component::f2), rate(Component::f4)};
}

RecoveryResiduals recovery_residuals(const StateSnapshot& s, const Grid& grid, const TransportRates* rates) {
    if (!same_shape(s, grid)) throw ValidationError("recovery_residuals: state does not match grid");
    for (double v : s.f4().values())
        if (!(std::abs(1.0 + v) > 1e-12)) throw ValidationError("recovery_residuals: 1 + f4 degenerate");
    for (double v : s.rho().values())
        if (!(v > 0.0)) throw ValidationError("recovery_residuals: nonpositive density");

    const Field2D ux = diff(s.u(), grid, Axis::x), uy = diff(s.u(), grid, Axis::y);
    const Field2D vx = diff(s.v(), grid, Axis::x), vy = diff(s.v(), grid, Axis::y);
    const Field2D f1y = diff(s.f1(), grid, Axis::y);
    const Field2D f2x = diff(s.f2(), grid, Axis::x), f2y = diff(s.f2(), grid, Axis::y);
    const Field2D f3y = diff(s.f3(), grid, Axis::y);
    const Field2D f4x = diff(s.f4(), grid, Axis::x), f4y = diff(s.f4(), grid, Axis::y);
    const Field2D rhoy = diff(s.rho(), grid, Axis::y);

    const std::size_t n = s.rho().size();
    Field2D r11(grid.nx, grid.ny), r12(grid.nx, grid.ny), inv_rho(grid.nx, grid.ny), f2f3(grid.nx, grid.ny);
    for (std::size_t k = 0; k < n; ++k) {
        r11[k] = s.rho()[k] * (1.0 + s.f1()[k]);
        r12[k] = s.rho()[k] * s.f2()[k];
        inv_rho[k] = 1.0 / s.rho()[k];
        f2f3[k] = s.f2()[k] * s.f3()[k];
    }
    const Field2D r11x = diff(r11, grid, Axis::x), r12x = diff(r12, grid, Axis::x);
    const Field2D inv_rho_y = diff(inv_rho, grid, Axis::y), f2f3y = diff(f2f3, grid, Axis::y);

    RecoveryResiduals out{grid.zeros(), grid.zeros(), grid.zeros(), grid.zeros(), grid.zeros()};
    for (std::size_t k = 0; k < n; ++k) {
        const double u = s.u()[k], v = s.v()[k];
        const double f1 = s.f1()[k], f2 = s.f2()[k], f3 = s.f3()[k], f4 = s.f4()[k], rho = s.rho()[k];
        double f4t, f2t;
        if (rates) {
            f4t = rates->df4_dt[k];
            f2t = rates->df2_dt[k];
        } else {
            f4t = -(u * f4x[k] + v * f4y[k]) + f2 * vx[k] + (1.0 + f4) * vy[k];
            f2t = -(u * f2x[k] + v * f2y[k]) + f2 * ux[k] + (1.0 + f4) * uy[k];
        }
        out.dyv[k] = vy[k] - (f4t + u * f4x[k] + v * f4y[k] - f2 * vx[k]) / (1.0 + f4);
        out.dyu[k] = uy[k] - (f2t + u * f2x[k] + v * f2y[k] - f2 * ux[k]) / (1.0 + f4);
        out.dyf3[k] = f3y[k] + (r11x[k] + f3 * rhoy[k]) / rho;
        out.dyf4[k] = f4y[k] + (r12x[k] + (1.0 + f4) * rhoy[k]) / rho;
        out.dyf1[k] = f1y[k] - (inv_rho_y[k] + f2f3y[k] - (1.0 + f1) * f4y[k]) / (1.0 + f4);
    }
    return out;
}

double wall_layer_indicator(const StateSnapshot& s, const Grid& grid) {
    const Field2D& u = s.u();
    double m = 0.0;
    for (int i = 0; i < grid.nx; ++i)
        m = std::max(m, std::abs((-3.0 * u(i, 0) + 4.0 * u(i, 1) - u(i, 2)) / (2.0 * grid.dy)));
    return m;
}

double max_abs_interior(const Field2D& f) {
    double m = 0.0;
    for (int j = 0; j + 1 < f.ny(); ++j) m = std::max(m, max_abs_row(f, j));
    return m;
}

// ---------------------------------------------------------------------------

EnergyAccumulator::EnergyAccumulator(int m, double eps) : m_(m), eps_(eps), addends_(7, 0.0), last_integrand_(7, 0.0) {
    if (m < 0) throw ValidationError("energy: m must be >= 0");
}

std::vector<double> EnergyAccumulator::integrands(const History& history, const Grid& grid) const {
    const bool with_time = history.size() >= static_cast<std::size_t>(m_ + 1);
    auto norm_sq = [&](const FieldSelector& sel, int order) {
        const int k = std::max(order, 0);
        const auto parts = conormal_norm_sq_by_order(history, grid, sel, k, with_time && history.size() >= static_cast<std::size_t>(k + 1));
        double t = 0.0;
        for (double p : parts) t += p;
        return t;
    };
    std::vector<double> out(7, 0.0);
    for (Component c : kAllComponents) {
        out[0] += norm_sq(select_perturbation(c), m_);
        out[3] += norm_sq(select_normal_derivative(c, 1, grid), m_ - 1);
        out[4] += norm_sq(select_normal_derivative(c, 2, grid), m_ - 2);
    }
    for (Component c : {Component::rho, Component::f2}) {
        out[1] += norm_sq(select_normal_derivative(c, 1, grid), m_ - 1);
        out[2] += norm_sq(select_normal_derivative(c, 2, grid), m_ - 2);
    }
    for (Component c : {Component::u, Component::v}) {
        out[5] += norm_sq(select_gradient(c, Axis::x, grid), m_) + norm_sq(select_gradient(c, Axis::y, grid), m_);
        out[6] += norm_sq(select_normal_derivative(c, 2, grid), m_ - 1) + norm_sq(select_normal_derivative(c, 3, grid), m_ - 2);
    }
    return out;
}

const std::vector<double>& EnergyAccumulator::add_sample(double t, const std::vector<double>& in) {
    if (in.size() != 7) throw ValidationError("energy: expected 7 integrands");
    // sup terms
    addends_[0] = std::max(addends_[0], in[0]);
    addends_[1] = std::max(addends_[1], eps_ * in[1]);
    addends_[2] = std::max(addends_[2], eps_ * in[2]);
    if (started_) {
        const double dt = t - last_t_;
        if (!(dt >= 0.0)) throw ValidationError("energy: samples must be time-ordered");
        const double w[7] = {0, 0, 0, 1.0, 1.0, eps_, eps_ * eps_};
        for (int k = 3; k < 7; ++k) addends_[k] += w[k] * 0.5 * dt * (in[k] + last_integrand_[k]);
    }
    last_integrand_ = in;
    last_t_ = t;
    started_ = true;
    return addends_;
}

double EnergyAccumulator::total() const {
    double s = 0.0;
    for (double a : addends_) s += a;
    return s;
}

// ---------------------------------------------------------------------------

DiagnosticsEngine::DiagnosticsEngine(const Grid& grid, const PhysParams& params, DiagnosticsConfig cfg)
    : grid_(&grid), params_(params), cfg_(cfg), energy_(cfg.m, params.eps) {}

NormReport DiagnosticsEngine::sample(const History& history) {
    if (history.empty()) throw ValidationError("diagnostics: empty history");
    const Grid& grid = *grid_;
    const StateSnapshot& s = history.newest();
    const int m = cfg_.m;
    NormReport r;
    r.t = s.t;
    r.time_terms = cfg_.include_time && history.size() >= static_cast<std::size_t>(m + 1);

    auto cumulative = [&](std::initializer_list<Component> comps) {
        std::vector<double> acc(static_cast<std::size_t>(m + 1), 0.0);
        for (Component c : comps) {
            const auto parts = conormal_norm_sq_by_order(history, grid, select_perturbation(c), m, r.time_terms);
            for (int k = 0; k <= m; ++k) acc[k] += parts[k];
        }
        for (int k = 1; k <= m; ++k) acc[k] += acc[k - 1];
        return acc;
    };
    r.density_norms = cumulative({Component::rho});
    r.velocity_norms = cumulative({Component::u, Component::v});
    r.deformation_norms = cumulative({Component::f1, Component::f2, Component::f3, Component::f4});

    std::vector<double> integ = cfg_.include_time ? energy_.integrands(history, grid)
                                                  : energy_.integrands(history.tail(1), grid);
    r.nm_addends = energy_.add_sample(s.t, integ);
    r.nm_proxy = energy_.total();

    q_sup_ = std::max(q_sup_, q_instant(cfg_.include_time ? history : history.tail(1), grid, params_.gamma));
    r.q_proxy = q_sup_;

    const auto cres = constraint_residuals(s, grid);
    r.det_res = max_abs_interior(cres.det);
    r.piola_res = std::max(max_abs_interior(cres.piola_x), max_abs_interior(cres.piola_y));

    const auto rates = rates_from_history(history, grid);
    const auto rec = recovery_residuals(s, grid, rates ? &*rates : nullptr);
    r.rec_res_dyv = max_abs_interior(rec.dyv);
    r.rec_res_dyu = max_abs_interior(rec.dyu);
    r.rec_res_dyf3 = max_abs_interior(rec.dyf3);
    r.rec_res_dyf4 = max_abs_interior(rec.dyf4);
    r.rec_res_dyf1 = max_abs_interior(rec.dyf1);

    r.wall_layer = wall_layer_indicator(s, grid);
    const auto wt = wall_traces(s);
    r.wall_u_trace = wt.u_max;
    r.wall_f3_trace = wt.f3_max;
    return r;
}

std::vector<std::string> norm_report_columns(int m) {
    std::vector<std::string> c = {"t", "nm_proxy"};
    for (int k = 0; k < 7; ++k) c.push_back("nm_a" + std::to_string(k));
    for (const char* n : {"q_proxy", "det_res", "piola_res", "rec_res_dyv", "rec_res_dyu", "rec_res_dyf3", "rec_res_dyf4",
                          "rec_res_dyf1", "wall_layer", "wall_u_trace", "wall_f3_trace", "time_terms"})
        c.emplace_back(n);
    for (const char* g : {"density", "velocity", "deformation"})
        for (int k = 0; k <= m; ++k) c.push_back(std::string(g) + "_norm" + std::to_string(k) + "_sq");
    return c;
}

std::vector<double> norm_report_row(const NormReport& r, int m) {
    std::vector<double> v = {r.t, r.nm_proxy};
    for (int k = 0; k < 7; ++k) v.push_back(k < static_cast<int>(r.nm_addends.size()) ? r.nm_addends[k] : 0.0);
    for (double x : {r.q_proxy, r.det_res, r.piola_res, r.rec_res_dyv, r.rec_res_dyu, r.rec_res_dyf3, r.rec_res_dyf4,
                     r.rec_res_dyf1, r.wall_layer, r.wall_u_trace, r.wall_f3_trace, r.time_terms ? 1.0 : 0.0})
        v.push_back(x);
    for (const auto* g : {&r.density_norms, &r.velocity_norms, &r.deformation_norms})
        for (int k = 0; k <= m; ++k) v.push_back(k < static_cast<int>(g->size()) ? (*g)[k] : 0.0);
    return v;
}

}  // namespace velab
