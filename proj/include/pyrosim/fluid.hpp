#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "pyrosim/errors.hpp"

namespace pyrosim {

enum class Waveform { square, sine, constant };

/// Inlet temperature program. `phase` shifts the waveform earlier in time.
struct InletSchedule {
    Waveform waveform = Waveform::square;
    double hot_temp = 363.15;  // K
    double cold_temp = 303.15; // K
    double period = 60.0;      // s
    double phase = 0.0;        // s
};

/// Plug-flow chain: the fluid visits each unit in series, giving up
/// draw/heat_capacity_rate kelvin per unit and reaching unit i a fixed
/// transit delay later than the inlet.
struct FluidChainSpec {
    InletSchedule schedule;
    double heat_capacity_rate = 4.18;   // W/K (mass flow x specific heat)
    std::size_t unit_count = 1;
    double transit_delay_per_unit = 0.0; // s
};

/// Fluid temperature seen at each unit this step.
struct FluidState {
    std::vector<double> per_unit_temps; // K
};

inline void validate(const InletSchedule& schedule) {
    if (!(schedule.hot_temp >= schedule.cold_temp)) {
        throw ConfigError("inlet schedule: hot_temp must be >= cold_temp");
    }
    if (schedule.waveform != Waveform::constant && !(schedule.period > 0.0)) {
        throw ConfigError("inlet schedule: period must be > 0 for non-constant waveforms");
    }
}

inline void validate(const FluidChainSpec& spec) {
    validate(spec.schedule);
    if (!(spec.heat_capacity_rate > 0.0)) {
        throw ConfigError("fluid chain: heat_capacity_rate must be > 0");
    }
    if (spec.unit_count < 1) {
        throw ConfigError("fluid chain: unit_count must be >= 1");
    }
    if (!(spec.transit_delay_per_unit >= 0.0)) {
        throw ConfigError("fluid chain: transit_delay_per_unit must be >= 0");
    }
}

/// Inlet temperature at time t. Square waves are hot for the first half
/// period; sine waves swing about the midpoint with the hot peak at t =
/// period/4 (for zero phase).
inline double inlet_temperature(const InletSchedule& schedule, double t) {
    switch (schedule.waveform) {
        case Waveform::constant:
            return schedule.hot_temp;
        case Waveform::square: {
            double u = std::fmod(t + schedule.phase, schedule.period);
            if (u < 0.0) u += schedule.period;
            return u < 0.5 * schedule.period ? schedule.hot_temp : schedule.cold_temp;
        }
        case Waveform::sine: {
            const double mid = 0.5 * (schedule.hot_temp + schedule.cold_temp);
            const double amp = 0.5 * (schedule.hot_temp - schedule.cold_temp);
            return mid + amp * std::sin(2.0 * std::numbers::pi * (t + schedule.phase) /
                                        schedule.period);
        }
    }
    return schedule.hot_temp;
}

/// Recompute the fluid temperature at every unit for time t. Unit i sees the
/// inlet waveform delayed by i transit delays (clamped at t = 0) minus the
/// cumulative depletion of all upstream draws.
inline FluidState advect_step(const FluidState& /*state*/, const FluidChainSpec& spec,
                              std::span<const double> unit_draws, double t) {
    validate(spec);
    if (unit_draws.size() != spec.unit_count) {
        throw ConfigError("advect_step: expected " + std::to_string(spec.unit_count) +
                          " unit draws, got " + std::to_string(unit_draws.size()));
    }
    FluidState next;
    next.per_unit_temps.resize(spec.unit_count);
    double cumulative_draw = 0.0;
    for (std::size_t i = 0; i < spec.unit_count; ++i) {
        const double t_seen = std::max(0.0, t - static_cast<double>(i) * spec.transit_delay_per_unit);
        next.per_unit_temps[i] =
            inlet_temperature(spec.schedule, t_seen) - cumulative_draw / spec.heat_capacity_rate;
        cumulative_draw += unit_draws[i];
    }
    return next;
}

struct EnergyAudit {
    double extracted_joules = 0.0;
    double enthalpy_drop_joules = 0.0;
};

/// Conservation check over a run: the heat the units extracted should equal
/// the enthalpy the fluid lost between inlet and outlet. All spans are per
/// integration step.
inline EnergyAudit chain_energy_audit(std::span<const double> step_durations,
                                      std::span<const double> inlet_temps,
                                      std::span<const double> outlet_temps,
                                      std::span<const double> extracted_watts,
                                      double heat_capacity_rate) {
    const std::size_t n = step_durations.size();
    if (inlet_temps.size() != n || outlet_temps.size() != n || extracted_watts.size() != n) {
        throw TraceError("chain_energy_audit: history spans have mismatched lengths");
    }
    EnergyAudit audit;
    for (std::size_t k = 0; k < n; ++k) {
        audit.extracted_joules += extracted_watts[k] * step_durations[k];
        audit.enthalpy_drop_joules +=
            heat_capacity_rate * (inlet_temps[k] - outlet_temps[k]) * step_durations[k];
    }
    return audit;
}

} // namespace pyrosim
