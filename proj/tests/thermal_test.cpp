#include <catch2/catch.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "pyrosim/fitting.hpp"
#include "pyrosim/thermal.hpp"

using namespace pyrosim;

namespace {

constexpr double kHot = 363.15;
constexpr double kCold = 303.15;

// Closed-form single-RC response, the independent oracle for reduced ladders.
double single_rc(double t0, double t_fluid, double tau, double t) {
    return t_fluid + (t0 - t_fluid) * std::exp(-t / tau);
}

ThermalUnitSpec single_rc_spec(double r_total, double c_crystal) {
    ThermalUnitSpec spec;
    spec.layers = {
        {0.4 * r_total, 0.0, LayerKind::channel},
        {0.1 * r_total, 0.0, LayerKind::adhesive},
        {0.5 * r_total, c_crystal, LayerKind::crystal},
    };
    return spec;
}

ThermalState step_for(ThermalState state, const ThermalUnitSpec& spec, double fluid_temp,
                      double dt, int steps) {
    for (int i = 0; i < steps; ++i) state = thermal_step(state, spec, fluid_temp, dt);
    return state;
}

} // namespace

TEST_CASE("build_unit_network initializes uniformly") {
    ThermalUnitSpec spec;
    spec.layers = {{4.0, 1.5, LayerKind::channel},
                   {1.7, 0.0, LayerKind::adhesive},
                   {6.0, 0.364, LayerKind::crystal}};
    const auto state = build_unit_network(spec, 303.15);
    REQUIRE(state.node_temps == std::vector<double>{303.15, 303.15, 303.15});
    REQUIRE(state.crystal_dtdt == 0.0);
}

TEST_CASE("invalid layer parameters are rejected by name") {
    ThermalUnitSpec spec;
    spec.layers = {{-1.0, 1.5, LayerKind::channel}, {6.0, 0.364, LayerKind::crystal}};
    REQUIRE_THROWS_MATCHES(build_unit_network(spec, 300.0), ConfigError,
                           Catch::Matchers::Message(
                               "thermal layer 0 (channel): thermal_resistance must be > 0"));

    ThermalUnitSpec no_crystal;
    no_crystal.layers = {{1.0, 1.0, LayerKind::channel}};
    REQUIRE_THROWS_AS(build_unit_network(no_crystal, 300.0), ConfigError);

    ThermalUnitSpec zero_crystal_cap;
    zero_crystal_cap.layers = {{1.0, 0.0, LayerKind::crystal}};
    REQUIRE_THROWS_AS(build_unit_network(zero_crystal_cap, 300.0), ConfigError);
}

TEST_CASE("zero-capacitance adhesive is slaved to its neighbors") {
    // Three-layer ladder with a pure-resistance adhesive must match a
    // two-node ladder whose second resistance is the combined value.
    ThermalUnitSpec full;
    full.layers = {{2.0, 1.0, LayerKind::channel},
                   {3.0, 0.0, LayerKind::adhesive},
                   {4.0, 0.5, LayerKind::crystal}};
    ThermalUnitSpec reduced;
    reduced.layers = {{2.0, 1.0, LayerKind::channel}, {7.0, 0.5, LayerKind::crystal}};

    auto a = build_unit_network(full, kCold);
    auto b = build_unit_network(reduced, kCold);
    const double dt = 0.01;
    for (int i = 0; i < 2000; ++i) {
        a = thermal_step(a, full, kHot, dt);
        b = thermal_step(b, reduced, kHot, dt);
        REQUIRE(a.node_temps[0] == Approx(b.node_temps[0]).margin(1e-9));
        REQUIRE(a.node_temps[2] == Approx(b.node_temps[1]).margin(1e-9));
        // The slaved node divides the drop in proportion to the resistances.
        const double expect =
            a.node_temps[0] + (a.node_temps[2] - a.node_temps[0]) * 3.0 / 7.0;
        REQUIRE(a.node_temps[1] == Approx(expect).margin(1e-12));
    }
    REQUIRE(a.crystal_dtdt == Approx(b.crystal_dtdt).margin(1e-12));
}

TEST_CASE("single effective RC follows the exponential closed form") {
    const double tau = 5.0;
    const double c = 0.5;
    const auto spec = single_rc_spec(tau / c, c);
    auto state = build_unit_network(spec, kCold);

    const double dt = tau / 100.0;
    state = step_for(state, spec, kHot, dt, 100); // t = tau
    REQUIRE(state.node_temps.back() ==
            Approx(single_rc(kCold, kHot, tau, tau)).epsilon(1e-8));

    state = step_for(state, spec, kHot, dt, 400); // t = 5 tau
    const double expect = single_rc(kCold, kHot, tau, 5.0 * tau);
    REQUIRE(std::abs(state.node_temps.back() - expect) / std::abs(kCold - kHot) < 1e-6);

    // t = 5 s with tau = 5 s lands at T_f + (T_0 - T_f)/e ~ 341.08 K.
    REQUIRE(single_rc(kCold, kHot, tau, 5.0) == Approx(341.078).margin(5e-3));
}

TEST_CASE("equilibrium is a fixed point") {
    ThermalUnitSpec spec;
    spec.layers = {{4.0, 1.5, LayerKind::channel}, {7.7, 0.364, LayerKind::crystal}};
    auto state = build_unit_network(spec, 330.0);
    const auto next = thermal_step(state, spec, 330.0, 0.05);
    REQUIRE(next.node_temps == state.node_temps);
    REQUIRE(next.crystal_dtdt == 0.0);
}

TEST_CASE("initial heating rate of a single RC is (T_f - T_0)/tau") {
    const double tau = 5.0;
    const auto spec = single_rc_spec(10.0, 0.5);
    auto state = build_unit_network(spec, kCold);
    const double dt = tau / 1000.0;
    state = thermal_step(state, spec, kHot, dt);
    REQUIRE(state.crystal_dtdt == Approx((kHot - kCold) / tau).epsilon(1e-3));
}

TEST_CASE("step-size guard reports the limiting time constant") {
    const auto spec = single_rc_spec(10.0, 0.5); // tau = 5 s
    const auto state = build_unit_network(spec, kCold);
    REQUIRE_THROWS_AS(thermal_step(state, spec, kHot, 2.0), StepSizeError);
    try {
        thermal_step(state, spec, kHot, 2.0);
    } catch (const StepSizeError& e) {
        REQUIRE(std::string(e.what()).find("tau=5") != std::string::npos);
    }
    REQUIRE_THROWS_AS(thermal_step(state, spec, kHot, 0.0), StepSizeError);
}

TEST_CASE("ladder response is linear in the forcing") {
    ThermalUnitSpec spec;
    spec.layers = {{4.0, 1.5, LayerKind::channel},
                   {1.7, 0.0, LayerKind::adhesive},
                   {6.0, 0.364, LayerKind::crystal}};
    const double ambient = 300.0;
    const double alpha = 2.5;
    auto a = build_unit_network(spec, ambient);
    auto b = build_unit_network(spec, ambient);
    const double dt = 0.05;
    for (int i = 0; i < 400; ++i) {
        a = thermal_step(a, spec, ambient + 10.0, dt);
        b = thermal_step(b, spec, ambient + alpha * 10.0, dt);
        for (std::size_t n = 0; n < a.node_temps.size(); ++n) {
            REQUIRE(b.node_temps[n] - ambient ==
                    Approx(alpha * (a.node_temps[n] - ambient)).margin(1e-9));
        }
    }
}

TEST_CASE("nodes relax monotonically to the fluid temperature") {
    ThermalUnitSpec spec;
    spec.layers = {{4.0, 1.5, LayerKind::channel}, {7.7, 0.364, LayerKind::crystal}};
    auto state = build_unit_network(spec, kCold);
    const double dt = 0.05;
    std::vector<double> last = {1e9, 1e9};
    for (int i = 0; i < 4000; ++i) {
        state = thermal_step(state, spec, kHot, dt);
        for (std::size_t n = 0; n < 2; ++n) {
            const double gap = std::abs(state.node_temps[n] - kHot);
            REQUIRE(gap <= last[n] + 1e-12);
            last[n] = gap;
        }
    }

    // Exponential convergence bound: a 0.4 K offset decays below 1e-9 K
    // within 20 effective time constants; a 60 K swing needs ~25.
    const double tau = 5.0;
    const auto rc = single_rc_spec(10.0, 0.5);
    auto small = build_unit_network(rc, kHot - 0.4);
    small = step_for(small, rc, kHot, tau / 20.0, 20 * 20);
    REQUIRE(std::abs(small.node_temps.back() - kHot) < 1e-9);

    auto wide = build_unit_network(rc, kCold);
    wide = step_for(wide, rc, kHot, tau / 20.0, 25 * 20);
    REQUIRE(std::abs(wide.node_temps.back() - kHot) < 1e-9);
}

TEST_CASE("peak heating rate against the analytic single-RC oracle") {
    const auto spec = single_rc_spec(10.0, 0.5); // tau = 5 s
    const double peak = peak_crystal_dtdt(spec, kHot, kCold, 25.0);
    REQUIRE(peak == Approx((kHot - kCold) / 5.0).epsilon(2e-3));

    REQUIRE(peak_crystal_dtdt(spec, kCold, kCold, 25.0) == 0.0);

    // Doubling the drive doubles the peak (ladder linearity).
    const double twice = peak_crystal_dtdt(spec, kCold + 2.0 * (kHot - kCold), kCold, 25.0);
    REQUIRE(twice == Approx(2.0 * peak).epsilon(1e-9));
}

TEST_CASE("peak heating rate is affine in the fluid temperature") {
    ThermalUnitSpec spec;
    spec.layers = {{4.0, 1.5, LayerKind::channel},
                   {1.7, 0.0, LayerKind::adhesive},
                   {6.0, 0.364, LayerKind::crystal}};
    DataSet data;
    data.x_label = "fluid_C";
    data.y_label = "peak_K_per_s";
    for (double celsius = 30.0; celsius <= 90.0; celsius += 10.0) {
        data.x.push_back(celsius);
        data.y.push_back(peak_crystal_dtdt(spec, celsius + 273.15, kCold, 60.0));
    }
    const auto fit = fit_linear(data);
    REQUIRE(fit.r_squared >= 0.999);
}

TEST_CASE("unit_heat_draw is the inlet temperature drop over the channel resistance") {
    ThermalUnitSpec spec;
    spec.layers = {{60.0, 1.0, LayerKind::channel}, {10.0, 0.364, LayerKind::crystal}};
    const auto state = build_unit_network(spec, kCold);
    REQUIRE(unit_heat_draw(state, spec, kHot) == Approx(1.0).epsilon(1e-12));
    REQUIRE(unit_heat_draw(state, spec, kCold) == 0.0);
    REQUIRE(unit_heat_draw(state, spec, kCold - 60.0) == Approx(-1.0).epsilon(1e-12));
}
