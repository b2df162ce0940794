/// @file state.hpp
/// @brief Prognostic state (rho, u, v, f1..f4) and pointwise constitutive /
/// constraint quantities.
///
/// The deformation tensor is stored as a perturbation of the identity,
///   F = [[1 + f1, f2],
///        [f3, 1 + f4]],
/// so that the columns of F are G1 + e1 = (1+f1, f3) and G2 + e2 = (f2, 1+f4).
#pragma once

#include <array>
#include <string_view>

#include "velab/field.hpp"
#include "velab/grid.hpp"

namespace velab {

enum class Component : int { rho = 0, u, v, f1, f2, f3, f4 };
inline constexpr int kNumComponents = 7;
inline constexpr std::array<Component, kNumComponents> kAllComponents{
    Component::rho, Component::u, Component::v, Component::f1, Component::f2, Component::f3, Component::f4};

std::string_view component_name(Component c);
/// Value of the component at the equilibrium (1, 0, I) in stored form: 1 for rho, 0 otherwise.
inline double equilibrium_value(Component c) { return c == Component::rho ? 1.0 : 0.0; }

struct StateSnapshot {
    std::array<Field2D, kNumComponents> fields;
    double t = 0.0;

    Field2D& operator[](Component c) { return fields[static_cast<int>(c)]; }
    const Field2D& operator[](Component c) const { return fields[static_cast<int>(c)]; }

    const Field2D& rho() const { return (*this)[Component::rho]; }
    const Field2D& u() const { return (*this)[Component::u]; }
    const Field2D& v() const { return (*this)[Component::v]; }
    const Field2D& f1() const { return (*this)[Component::f1]; }
    const Field2D& f2() const { return (*this)[Component::f2]; }
    const Field2D& f3() const { return (*this)[Component::f3]; }
    const Field2D& f4() const { return (*this)[Component::f4]; }

    int nx() const { return fields[0].nx(); }
    int ny() const { return fields[0].ny(); }
    friend bool operator==(const StateSnapshot&, const StateSnapshot&) = default;
};

struct PhysParams {
    double gamma = 1.4;
    double mu = 1.0;
    double lambda = 0.0;
    double eps = 0.0;
    bool elastic_coupling = true;
    /// Fourth-order dissipation coefficient for ideal (eps = 0) runs.
    double filter_kappa = 0.01;

    /// Throws ValidationError naming the violated rule.
    void validate() const;
};

StateSnapshot uniform_state(const Grid& grid);

/// p = rho^gamma pointwise.  Throws on nonpositive density.
Field2D pressure(const Field2D& rho, double gamma);

struct StressField {
    Field2D xx, xy, yy;
};

/// tau = rho F F^T.
StressField elastic_stress(const StateSnapshot& s);

struct ConstraintResiduals {
    Field2D det;      ///< rho det F - 1
    Field2D piola_x;  ///< d_x(rho(1+f1)) + d_y(rho f3)
    Field2D piola_y;  ///< d_x(rho f2) + d_y(rho(1+f4))
};

ConstraintResiduals constraint_residuals(const StateSnapshot& s, const Grid& grid);

/// omega = d_y u - d_x v.
Field2D vorticity(const StateSnapshot& s, const Grid& grid);

/// Throws RegimeError unless rho > 0 and 1 + f4 > 0 everywhere and all
/// values are finite.
void check_regime(const StateSnapshot& s);

bool same_shape(const StateSnapshot& s, const Grid& grid);

}  // namespace velab
