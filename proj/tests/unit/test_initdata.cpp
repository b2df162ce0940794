#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "velab/error.hpp"
#include "velab/initdata.hpp"

using namespace velab;
using testing::kTwoPi;

TEST_CASE("bump profile") {
    const BumpValue b = bump_profile(1.5, 1.5, 1.0);
    CHECK(b.val == doctest::Approx(1.0));
    CHECK(b.d1 == doctest::Approx(0.0));
    CHECK(bump_profile(0.5, 1.5, 1.0).val == 0.0);
    CHECK(bump_profile(3.0, 1.5, 1.0).val == 0.0);
    // finite-difference check of the derivatives
    const double y = 1.2, h = 1e-5;
    CHECK(bump_profile(y, 1.5, 1.0).d1 ==
          doctest::Approx((bump_profile(y + h, 1.5, 1.0).val - bump_profile(y - h, 1.5, 1.0).val) / (2 * h)).epsilon(1e-6));
    CHECK(bump_profile(y, 1.5, 1.0).d2 ==
          doctest::Approx((bump_profile(y + h, 1.5, 1.0).d1 - bump_profile(y - h, 1.5, 1.0).d1) / (2 * h)).epsilon(1e-6));
}

TEST_CASE("Piola data: rho det F = 1 pointwise and F = I on the wall") {
    const Grid g = build_grid(32, 33, kTwoPi, kTwoPi);
    DisplacementSpec d;
    d.amplitude = 0.05;
    d.b_ratio = 0.5;
    const StateSnapshot s = piola_initial_data(g, d);
    double worst = 0.0;
    for (std::size_t k = 0; k < s.rho().size(); ++k) {
        const double det = (1 + s.f1()[k]) * (1 + s.f4()[k]) - s.f2()[k] * s.f3()[k];
        worst = std::max(worst, std::abs(s.rho()[k] * det - 1.0));
    }
    CHECK(worst <= 1e-14);
    for (Component c : {Component::f1, Component::f2, Component::f3, Component::f4}) CHECK(max_abs_row(s[c], 0) == 0.0);
    CHECK(max_abs_row(s.rho() - g.constant(1.0), 0) == 0.0);
    CHECK(max_abs(s.u()) == 0.0);
}

TEST_CASE("Piola residual is a pure discretization error") {
    double res[2];
    int n = 0;
    for (int nx : {64, 128}) {
        const Grid g = build_grid(nx, nx + 1, kTwoPi, kTwoPi);
        DisplacementSpec d;
        d.b_ratio = 0.7;
        const auto cr = constraint_residuals(piola_initial_data(g, d), g);
        res[n++] = std::max(max_abs(cr.piola_x), max_abs(cr.piola_y));
    }
    CHECK(res[0] / res[1] >= 3.5);
}

TEST_CASE("zero amplitude gives the equilibrium") {
    const Grid g = build_grid(16, 17, kTwoPi, kTwoPi);
    DisplacementSpec d;
    d.amplitude = 0.0;
    CHECK(piola_initial_data(g, d) == uniform_state(g));
}

TEST_CASE("velocity options") {
    const Grid g = build_grid(32, 65, kTwoPi, 4.0);
    DisplacementSpec d;
    d.amplitude = 0.0;
    d.velocity = VelocityInit::shear;
    d.velocity_amplitude = 0.02;
    d.velocity_width = 0.5;
    const StateSnapshot s = piola_initial_data(g, d);
    CHECK(max_abs_row(s.u(), 0) == 0.0);
    CHECK(max_abs(s.v()) == 0.0);
    // u = A sin(x) (y/l) e^{1-y/l} peaks at y = l with value A sin(x)
    CHECK(max_abs(s.u()) == doctest::Approx(0.02).epsilon(0.01));

    d.velocity = VelocityInit::bump;
    const StateSnapshot b = piola_initial_data(g, d);
    // discrete divergence is pure truncation error
    auto div_of = [&](int nx, int ny) {
        const Grid gg = build_grid(nx, ny, kTwoPi, 4.0);
        const StateSnapshot bb = piola_initial_data(gg, d);
        return max_abs(diff(bb.u(), gg, Axis::x) + diff(bb.v(), gg, Axis::y));
    };
    CHECK(div_of(32, 65) / div_of(64, 129) >= 3.5);
    CHECK(max_abs_row(b.u(), 0) == 0.0);
    CHECK(max_abs_row(b.v(), 0) == 0.0);
}

TEST_CASE("displacement validation") {
    DisplacementSpec d;
    d.y_center = 0.5;
    d.y_width = 1.0;
    CHECK_THROWS_AS(d.validate(), ValidationError);
    d = DisplacementSpec{};
    d.amplitude = 0.9;
    CHECK_THROWS_AS(piola_initial_data(build_grid(16, 17, kTwoPi, kTwoPi), d), ValidationError);
    CHECK(parse_velocity_init("shear") == VelocityInit::shear);
    CHECK_THROWS_AS(parse_velocity_init("swirl"), ValidationError);
}
