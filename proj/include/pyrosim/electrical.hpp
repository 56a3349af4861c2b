#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "pyrosim/errors.hpp"
#include "pyrosim/integrate.hpp"
#include "pyrosim/units.hpp"

namespace pyrosim {

/// Pyroelectric and dielectric properties of one crystal.
struct CrystalSpec {
    double pyro_coeff = 8.3e-5;        // C/(m^2 K), magnitude
    double electrode_area = 2.5e-5;    // m^2
    double thickness = 5e-3;           // m
    double rel_permittivity = 28.7;    // dimensionless
    double self_capacitance = 1.27e-12; // F, parallel-plate value unless overridden
};

/// Parallel-plate capacitance of the crystal itself.
inline double derived_self_capacitance(double electrode_area, double thickness,
                                       double rel_permittivity) {
    return vacuum_permittivity * rel_permittivity * electrode_area / thickness;
}

/// Gap-closing electrostatic switch. Either `pull_in_voltage` is given
/// explicitly or it is derived from the gap/area/spring geometry.
struct SwitchSpec {
    std::optional<double> pull_in_voltage; // V
    double release_voltage = 0.0;          // V, hysteresis lower bound
    double contact_resistance = 1e3;       // ohm
    std::optional<double> gap;             // m
    std::optional<double> actuation_area;  // m^2
    std::optional<double> spring_constant; // N/m
};

enum class LoadKind { capacitor, actuator };

/// Electrical network around one crystal: the crystal node, an optional
/// parasitic, a leak path, and a switched load.
struct ElectricalNetworkSpec {
    CrystalSpec crystal;
    double store_capacitance = 2e-12;     // F
    double parasitic_capacitance = 0.0;   // F
    double leak_resistance = 6e11;        // ohm, may be infinite
    SwitchSpec sw;
    LoadKind load_kind = LoadKind::capacitor;
};

enum class SwitchPhase { open, closed };

struct ElectricalState {
    double pyro_voltage = 0.0; // V
    double load_voltage = 0.0; // V
    SwitchPhase switch_phase = SwitchPhase::open;
};

/// Quadratic displacement map of a capacitive electrostatic actuator.
struct ActuatorSpec {
    double quad_coeff = 0.0;  // m/V^2
    double capacitance = 0.0; // F
};

/// Pull-in threshold. An explicit value wins; otherwise the standard
/// parallel-plate instability sqrt(8 k g^3 / (27 eps0 A)) is used.
inline double pull_in_voltage(const SwitchSpec& sw) {
    if (sw.pull_in_voltage) {
        return *sw.pull_in_voltage;
    }
    if (sw.gap && sw.actuation_area && sw.spring_constant) {
        if (!(*sw.gap >= 0.0) || !(*sw.actuation_area > 0.0) || !(*sw.spring_constant > 0.0)) {
            throw ConfigError("switch: gap must be >= 0 and actuation_area, spring_constant > 0");
        }
        return std::sqrt(8.0 * *sw.spring_constant * *sw.gap * *sw.gap * *sw.gap /
                         (27.0 * vacuum_permittivity * *sw.actuation_area));
    }
    throw ConfigError("switch: pull_in_voltage not set and pull-in geometry incomplete");
}

inline void validate(const CrystalSpec& crystal) {
    if (!(crystal.pyro_coeff > 0.0)) throw ConfigError("crystal: pyro_coeff must be > 0");
    if (!(crystal.electrode_area > 0.0)) throw ConfigError("crystal: electrode_area must be > 0");
    if (!(crystal.thickness > 0.0)) throw ConfigError("crystal: thickness must be > 0");
    if (!(crystal.rel_permittivity > 0.0)) throw ConfigError("crystal: rel_permittivity must be > 0");
    if (!(crystal.self_capacitance > 0.0)) throw ConfigError("crystal: self_capacitance must be > 0");
}

inline void validate(const ElectricalNetworkSpec& net) {
    validate(net.crystal);
    if (!(net.store_capacitance >= 0.0)) throw ConfigError("network: store_capacitance must be >= 0");
    if (!(net.parasitic_capacitance >= 0.0)) {
        throw ConfigError("network: parasitic_capacitance must be >= 0");
    }
    if (!(net.leak_resistance > 0.0)) {
        throw ConfigError("network: leak_resistance must be > 0 (or infinite)");
    }
    const double v_pi = pull_in_voltage(net.sw);
    if (!(v_pi > 0.0)) throw ConfigError("switch: pull_in_voltage must be > 0");
    if (!(net.sw.release_voltage > 0.0 && net.sw.release_voltage <= v_pi)) {
        throw ConfigError("switch: release_voltage must satisfy 0 < release <= pull_in");
    }
    if (!(net.sw.contact_resistance > 0.0)) {
        throw ConfigError("switch: contact_resistance must be > 0");
    }
}

/// Charge released by a temperature change delta_T, signed like delta_T.
inline double pyro_charge(const CrystalSpec& crystal, double delta_T) {
    return crystal.pyro_coeff * crystal.electrode_area * delta_T;
}

/// The crystal as a current source driven by its heating rate.
inline double pyro_current(const CrystalSpec& crystal, double dtdt) {
    return crystal.pyro_coeff * crystal.electrode_area * dtdt;
}

/// Common voltage after the switch connects the crystal node to the load,
/// conserving total charge.
inline double charge_share(double v_pyro, double v_load, const ElectricalNetworkSpec& net) {
    const double c_node = net.crystal.self_capacitance + net.parasitic_capacitance;
    const double c_total = c_node + net.store_capacitance;
    if (!(c_total > 0.0)) {
        throw ConfigError("charge_share: total capacitance must be > 0");
    }
    return (c_node * v_pyro + net.store_capacitance * v_load) / c_total;
}

/// Advance the crystal node voltage by one step under constant pyro current.
/// Open switch: only the crystal + parasitic capacitance charges and the load
/// holds its voltage. Closed switch: the store joins the node (one lumped
/// capacitance) and the load voltage follows the node. The step must satisfy
/// dt <= R_leak * C / 10.
inline ElectricalState electrical_step(const ElectricalState& state,
                                       const ElectricalNetworkSpec& net, double i_pyro,
                                       double dt) {
    if (!(dt > 0.0)) {
        throw StepSizeError("electrical_step: dt must be > 0");
    }
    const double c_node = net.crystal.self_capacitance + net.parasitic_capacitance;
    const bool closed = state.switch_phase == SwitchPhase::closed;
    const double c_eff = closed ? c_node + net.store_capacitance : c_node;
    if (!(c_eff > 0.0)) {
        throw ConfigError("electrical_step: effective capacitance must be > 0");
    }
    if (std::isfinite(net.leak_resistance)) {
        const double tau = net.leak_resistance * c_eff;
        if (dt > tau / 10.0) {
            std::ostringstream msg;
            msg << "electrical_step: dt=" << dt << " s exceeds R_leak*C/10 (" << tau / 10.0
                << " s)";
            throw StepSizeError(msg.str());
        }
    }

    const double leak_conductance =
        std::isfinite(net.leak_resistance) ? 1.0 / net.leak_resistance : 0.0;
    const double v_next = rk4_step_scalar(state.pyro_voltage, 0.0, dt, [&](double, double v) {
        return (i_pyro - v * leak_conductance) / c_eff;
    });

    ElectricalState next = state;
    next.pyro_voltage = v_next;
    if (closed) next.load_voltage = v_next;
    return next;
}

/// Hysteretic switch update: pull-in closes at |V| >= V_PI (electrostatic
/// force is polarity blind) and atomically shares charge with the load; the
/// switch reopens once |V| falls below the release voltage.
inline ElectricalState switch_transition(const ElectricalState& state,
                                         const ElectricalNetworkSpec& net) {
    const double v_pi = pull_in_voltage(net.sw);
    ElectricalState next = state;
    if (state.switch_phase == SwitchPhase::open) {
        if (std::abs(state.pyro_voltage) >= v_pi) {
            const double common = charge_share(state.pyro_voltage, state.load_voltage, net);
            next.pyro_voltage = common;
            next.load_voltage = common;
            next.switch_phase = SwitchPhase::closed;
        }
    } else {
        if (std::abs(state.pyro_voltage) < net.sw.release_voltage) {
            next.switch_phase = SwitchPhase::open;
        }
    }
    return next;
}

/// E = 1/2 C V^2.
inline double stored_energy(double capacitance, double voltage) {
    if (!(capacitance >= 0.0)) {
        throw ConfigError("stored_energy: capacitance must be >= 0");
    }
    return 0.5 * capacitance * voltage * voltage;
}

/// Electrostatic actuator stroke, quadratic in the applied voltage.
inline double actuator_displacement(const ActuatorSpec& act, double voltage) {
    return act.quad_coeff * voltage * voltage;
}

} // namespace pyrosim
