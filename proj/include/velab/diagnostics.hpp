/// @file diagnostics.hpp
/// @brief Discrete conormal Sobolev norms, the energy proxy N_m, the
/// W^{1,inf}_co quantity Q, constraint / recovery residuals and wall indicators.
///
/// L2 quadrature: trapezoid rule in y, uniform weights dx in periodic x.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "velab/boundary.hpp"
#include "velab/grid.hpp"
#include "velab/history.hpp"
#include "velab/state.hpp"

namespace velab {

using FieldSelector = std::function<Field2D(const StateSnapshot&)>;

/// The component itself.
FieldSelector select(Component c);
/// The component minus its equilibrium value (rho - 1, u, ..., F - I).
FieldSelector select_perturbation(Component c);
/// d_y^order of a component (order 1, 2 or 3; d_y^2 uses the compact stencil).
FieldSelector select_normal_derivative(Component c, int order, const Grid& grid);
/// d_axis of a component.
FieldSelector select_gradient(Component c, Axis axis, const Grid& grid);

/// Discrete L2 norm squared; OpenMP over rows, rows summed in order so the
/// result does not depend on the thread count.
double l2_norm_sq(const Field2D& f, const Grid& grid);

/// Sum of ||Z^alpha f||^2 over |alpha| == k, for k = 0..m (one entry per k).
/// a0 > 0 terms are included only when include_time is set.
std::vector<double> conormal_norm_sq_by_order(const History& history, const Grid& grid,
                                              const FieldSelector& sel, int m, bool include_time);

/// ||f||_m.  Throws ValidationError if include_time and history.size() < m + 1.
double conormal_norm(const History& history, const Grid& grid, const FieldSelector& sel, int m,
                     bool include_time);

/// Instantaneous W^{1,inf}_co sum at the newest snapshot of `history`.
double q_instant(const History& history, const Grid& grid, double gamma);
/// Running sup of q_instant over every prefix of `history`.
double q_norm(const History& history, const Grid& grid, double gamma);

/// Time derivatives of f2 and f4 used by the d_y u / d_y v recovery identities.
struct TransportRates {
    Field2D df2_dt;
    Field2D df4_dt;
};

/// Backward-difference rates over the last three or four snapshots (order 2
/// or 3); nullopt when the history holds fewer than three.
std::optional<TransportRates> rates_from_history(const History& history, const Grid& grid);

struct RecoveryResiduals {
    Field2D dyv;   ///< d_y v - (f4_t + u f4_x + v f4_y - f2 v_x) / (1 + f4)
    Field2D dyu;   ///< d_y u - (f2_t + u f2_x + v f2_y - f2 u_x) / (1 + f4)
    Field2D dyf3;  ///< d_y f3 + (d_x(rho(1+f1)) + f3 d_y rho) / rho
    Field2D dyf4;  ///< d_y f4 + (d_x(rho f2) + (1+f4) d_y rho) / rho
    Field2D dyf1;  ///< d_y f1 - (d_y(1/rho) + d_y(f2 f3) - (1+f1) d_y f4) / (1 + f4)
};

/// When `rates` is null the time derivatives are replaced by the transport
/// equations, which makes dyv / dyu vanish to round-off.
RecoveryResiduals recovery_residuals(const StateSnapshot& s, const Grid& grid, const TransportRates* rates = nullptr);

/// max_x |d_y u(x, 0)| with the one-sided second-order wall stencil.
double wall_layer_indicator(const StateSnapshot& s, const Grid& grid);

/// Max |f| over rows 0..ny-2 (the top row belongs to the far-field closure).
double max_abs_interior(const Field2D& f);

struct NormReport {
    double t = 0.0;
    /// Squared conormal norms ||.||_k^2 for k = 0..m; density = rho-1,
    /// velocity = (u, v), deformation = F - I.
    std::vector<double> density_norms, velocity_norms, deformation_norms;
    bool time_terms = false;  ///< whether Z0 entered the norms at this sample
    double nm_proxy = 0.0;
    std::vector<double> nm_addends;  ///< the seven N_m addends, see EnergyAccumulator
    double q_proxy = 0.0;
    double det_res = 0.0, piola_res = 0.0;
    double rec_res_dyv = 0.0, rec_res_dyu = 0.0, rec_res_dyf3 = 0.0, rec_res_dyf4 = 0.0, rec_res_dyf1 = 0.0;
    double wall_layer = 0.0;
    double wall_u_trace = 0.0, wall_f3_trace = 0.0;
};

/// Accumulates the energy proxy along a trajectory.  Addends, in order:
///   0  sup_s ||(rho-1, u, F-I)||_m^2
///   1  eps sup_s ||d_y(rho, f2)||_{m-1}^2
///   2  eps sup_s ||d_y^2(rho, f2)||_{m-2}^2
///   3  int ||d_y(rho, u, F)||_{m-1}^2
///   4  int ||d_y^2(rho, u, F)||_{m-2}^2
///   5  eps int ||grad u||_m^2
///   6  eps^2 int (||d_y^2 u||_{m-1}^2 + ||d_y^3 u||_{m-2}^2)
/// Sup terms are running suprema over samples, integrals use the trapezoid
/// rule on the sample times.  Orders below zero (m < 2) are evaluated at
/// order 0, so every addend is present for any m.
class EnergyAccumulator {
public:
    EnergyAccumulator(int m, double eps);

    /// Instantaneous integrands at the newest snapshot (same order as the addends).
    std::vector<double> integrands(const History& history, const Grid& grid) const;
    /// Folds one sample in; returns the current addends.
    const std::vector<double>& add_sample(double t, const std::vector<double>& integrands);

    const std::vector<double>& addends() const noexcept { return addends_; }
    double total() const;
    int m() const noexcept { return m_; }

private:
    int m_;
    double eps_;
    std::vector<double> addends_;
    std::vector<double> last_integrand_;
    double last_t_ = 0.0;
    bool started_ = false;
};

struct DiagnosticsConfig {
    int m = 2;
    bool include_time = true;  ///< Z0 terms whenever the history is deep enough
};

/// Stateful per-trajectory diagnostics: one NormReport per sample.
class DiagnosticsEngine {
public:
    DiagnosticsEngine(const Grid& grid, const PhysParams& params, DiagnosticsConfig cfg);
    NormReport sample(const History& history);

private:
    const Grid* grid_;
    PhysParams params_;
    DiagnosticsConfig cfg_;
    EnergyAccumulator energy_;
    double q_sup_ = 0.0;
};

/// Column names of the norms.csv table for a given m.
std::vector<std::string> norm_report_columns(int m);
/// Values in the same order as norm_report_columns.
std::vector<double> norm_report_row(const NormReport& r, int m);

}  // namespace velab
