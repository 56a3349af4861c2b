#pragma once

#include <limits>

#include "pyrosim/electrical.hpp"
#include "pyrosim/engine.hpp"
#include "pyrosim/fluid.hpp"
#include "pyrosim/thermal.hpp"

// Default model parameters for one harvester unit. Everything here is
// derived from the device geometry (5 mm lithium niobate cube glued into a
// printed metal channel with 500 um walls and a <100 um adhesive bond) and
// handbook material data, and every value can be overridden from the config
// file. No other constants are baked into the simulator.

namespace pyrosim::defaults {

// --- crystal: z-cut LiNbO3, 5 x 5 x 5 mm, gold electrodes ---
inline constexpr double pyro_coeff = 8.3e-5;      // C/(m^2 K)
inline constexpr double electrode_area = 2.5e-5;  // m^2 (5 mm x 5 mm face)
inline constexpr double crystal_thickness = 5e-3; // m
inline constexpr double rel_permittivity = 28.7;  // z-cut clamped value

inline CrystalSpec crystal() {
    CrystalSpec c;
    c.pyro_coeff = pyro_coeff;
    c.electrode_area = electrode_area;
    c.thickness = crystal_thickness;
    c.rel_permittivity = rel_permittivity;
    c.self_capacitance = derived_self_capacitance(electrode_area, crystal_thickness,
                                                  rel_permittivity); // ~1.27 pF
    return c;
}

// --- thermal ladder ---
// channel: 0.5 mm AlSi10Mg wall plus the water film over ~75 mm^2 of wetted
//   contact gives a few K/W; the engaged holder mass stores ~1.5 J/K.
// adhesive: ~100 um of filled epoxy (k ~ 1.2 W/mK) over the bonded faces;
//   its heat capacity is negligible, so it is lumped as pure resistance.
// crystal: bulk conduction into the cube (k ~ 5.6 W/mK); 0.58 g of LiNbO3
//   at 628 J/(kg K) stores 0.364 J/K.
inline constexpr double channel_resistance = 4.0;    // K/W
inline constexpr double channel_capacitance = 1.5;   // J/K
inline constexpr double adhesive_resistance = 1.7;   // K/W
inline constexpr double adhesive_capacitance = 0.0;  // J/K
inline constexpr double crystal_resistance = 6.0;    // K/W
inline constexpr double crystal_capacitance = 0.364; // J/K

inline ThermalUnitSpec thermal_unit(double ambient_temp = 303.15) {
    ThermalUnitSpec t;
    t.layers = {
        {channel_resistance, channel_capacitance, LayerKind::channel},
        {adhesive_resistance, adhesive_capacitance, LayerKind::adhesive},
        {crystal_resistance, crystal_capacitance, LayerKind::crystal},
    };
    t.ambient_temp = ambient_temp;
    t.ambient_loss_resistance = std::numeric_limits<double>::infinity();
    return t;
}

// --- electrical network ---
inline constexpr double leak_resistance = 2.5e11;   // ohm, refined by calibration
inline constexpr double store_capacitance = 2e-12;  // F
inline constexpr double parasitic_capacitance = 0.0;
inline constexpr double pull_in_voltage = 500.0;    // V
inline constexpr double release_fraction = 0.4;     // release = 0.4 * pull-in
inline constexpr double contact_resistance = 1e3;   // ohm

inline SwitchSpec pull_in_switch() {
    SwitchSpec sw;
    sw.pull_in_voltage = pull_in_voltage;
    sw.release_voltage = release_fraction * pull_in_voltage;
    sw.contact_resistance = contact_resistance;
    return sw;
}

inline ElectricalNetworkSpec electrical_network() {
    ElectricalNetworkSpec net;
    net.crystal = crystal();
    net.store_capacitance = store_capacitance;
    net.parasitic_capacitance = parasitic_capacitance;
    net.leak_resistance = leak_resistance;
    net.sw = pull_in_switch();
    net.load_kind = LoadKind::capacitor;
    return net;
}

// --- fluid loop: ~1 g/s of water alternating 30/90 C each minute ---
inline constexpr double heat_capacity_rate = 4.18; // W/K
inline constexpr double hot_temp = 363.15;         // K (90 C)
inline constexpr double cold_temp = 303.15;        // K (30 C)
inline constexpr double period = 60.0;             // s

inline FluidChainSpec fluid_chain(std::size_t unit_count = 1) {
    FluidChainSpec f;
    f.schedule = {Waveform::square, hot_temp, cold_temp, period, 0.0};
    f.heat_capacity_rate = heat_capacity_rate;
    f.unit_count = unit_count;
    f.transit_delay_per_unit = 0.0;
    return f;
}

// --- simulation grid ---
inline constexpr double dt = 5e-3;             // s
inline constexpr double t_end = 600.0;         // s (ten schedule periods)
inline constexpr double event_tolerance = 0.01; // V

inline ScenarioConfig scenario(std::size_t unit_count = 1) {
    ScenarioConfig cfg;
    cfg.fluid = fluid_chain(unit_count);
    cfg.units.resize(unit_count);
    for (auto& unit : cfg.units) {
        unit.thermal = thermal_unit(cold_temp);
        unit.electrical = electrical_network();
    }
    cfg.ambient_temp = cold_temp;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.event_tolerance = event_tolerance;
    cfg.accumulation_mode = AccumulationMode::unipolar_gated;
    return cfg;
}

} // namespace pyrosim::defaults
