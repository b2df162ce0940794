#pragma once

#include <cmath>
#include <random>

#include "velab/grid.hpp"
#include "velab/state.hpp"

namespace testing {

inline constexpr double kTwoPi = 6.283185307179586;

inline velab::Field2D random_field(const velab::Grid& g, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    velab::Field2D f = g.zeros();
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = u(rng);
    return f;
}

template <class Fn>
velab::Field2D sample(const velab::Grid& g, Fn&& fn) {
    velab::Field2D f = g.zeros();
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f(i, j) = fn(g.x(i), g.y(j));
    return f;
}

/// Smooth, non-equilibrium state without any constraint structure.
inline velab::StateSnapshot smooth_state(const velab::Grid& g, double amp = 0.05) {
    using velab::Component;
    velab::StateSnapshot s = velab::uniform_state(g);
    const double k = kTwoPi / g.lx;
    auto fill = [&](Component c, double base, double ph, double ky) {
        s[c] = sample(g, [&](double x, double y) { return base + amp * std::sin(k * x + ph) * std::cos(ky * y + ph); });
    };
    fill(Component::rho, 1.0, 0.3, 0.7);
    fill(Component::u, 0.0, 1.1, 0.5);
    fill(Component::v, 0.0, 2.0, 0.9);
    fill(Component::f1, 0.0, 0.1, 0.4);
    fill(Component::f2, 0.0, 0.7, 0.6);
    fill(Component::f3, 0.0, 1.7, 0.8);
    fill(Component::f4, 0.0, 2.4, 0.3);
    return s;
}

inline double ratio(double coarse, double fine) { return coarse / fine; }

}  // namespace testing
