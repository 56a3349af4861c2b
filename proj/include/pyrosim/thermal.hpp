#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "pyrosim/errors.hpp"
#include "pyrosim/integrate.hpp"

namespace pyrosim {

enum class LayerKind { channel, adhesive, crystal };

inline const char* to_string(LayerKind kind) {
    switch (kind) {
        case LayerKind::channel: return "channel";
        case LayerKind::adhesive: return "adhesive";
        case LayerKind::crystal: return "crystal";
    }
    return "?";
}

/// One series element of the heat path from the fluid to the crystal.
/// `thermal_resistance` is measured from the previous node (or the fluid for
/// the first layer) to this layer's node. A zero capacitance layer stores no
/// heat and is treated as a pure series resistance.
struct ThermalLayerSpec {
    double thermal_resistance = 0.0;  // K/W
    double thermal_capacitance = 0.0; // J/K
    LayerKind label = LayerKind::channel;
};

/// Heat path of one harvester unit, fluid side first, crystal last.
struct ThermalUnitSpec {
    std::vector<ThermalLayerSpec> layers;
    double ambient_temp = 303.15; // K
    double ambient_loss_resistance = std::numeric_limits<double>::infinity(); // K/W, crystal -> air
};

/// Node temperatures (one per layer) plus the crystal heating rate observed
/// over the most recent step, as the backward difference of the crystal node.
struct ThermalState {
    std::vector<double> node_temps; // K
    double crystal_dtdt = 0.0;      // K/s
};

inline void validate(const ThermalUnitSpec& spec) {
    if (spec.layers.empty()) {
        throw ConfigError("thermal unit: layer list is empty");
    }
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
        const auto& layer = spec.layers[i];
        std::ostringstream where;
        where << "thermal layer " << i << " (" << to_string(layer.label) << ")";
        if (!(layer.thermal_resistance > 0.0) || !std::isfinite(layer.thermal_resistance)) {
            throw ConfigError(where.str() + ": thermal_resistance must be > 0");
        }
        if (!(layer.thermal_capacitance >= 0.0) || !std::isfinite(layer.thermal_capacitance)) {
            throw ConfigError(where.str() + ": thermal_capacitance must be >= 0");
        }
    }
    if (spec.layers.back().label != LayerKind::crystal) {
        throw ConfigError("thermal unit: last layer must be the crystal");
    }
    if (!(spec.layers.back().thermal_capacitance > 0.0)) {
        throw ConfigError("thermal layer " + std::to_string(spec.layers.size() - 1) +
                          " (crystal): thermal_capacitance must be > 0");
    }
    if (!(spec.ambient_loss_resistance > 0.0)) {
        throw ConfigError("thermal unit: ambient_loss_resistance must be > 0 (or infinite)");
    }
    if (!std::isfinite(spec.ambient_temp)) {
        throw ConfigError("thermal unit: ambient_temp must be finite");
    }
}

/// Series RC ladder with zero-capacitance layers folded into the adjacent
/// resistances. Only nodes that store heat are integrated; folded nodes are
/// reconstructed afterwards by resistive interpolation between their
/// anchoring temperatures.
class ThermalLadder {
public:
    explicit ThermalLadder(const ThermalUnitSpec& spec) : spec_(&spec) {
        validate(spec);
        double pending = 0.0; // resistance accumulated through zero-C layers
        for (std::size_t i = 0; i < spec.layers.size(); ++i) {
            pending += spec.layers[i].thermal_resistance;
            if (spec.layers[i].thermal_capacitance > 0.0) {
                nodes_.push_back({spec.layers[i].thermal_capacitance, pending, i});
                pending = 0.0;
            }
        }
        // validate() guarantees the crystal is dynamic, so nothing trails.
        ambient_temp_ = spec.ambient_temp;
        ambient_resistance_ = spec.ambient_loss_resistance;
    }

    std::size_t dynamic_count() const { return nodes_.size(); }
    std::size_t layer_count() const { return spec_->layers.size(); }

    /// Resistance from the fluid to the first heat-storing node.
    double inlet_resistance() const { return nodes_.front().r_in; }

    /// Smallest per-node relaxation time; the explicit stepper requires
    /// dt <= stability_time_constant()/4.
    double stability_time_constant() const {
        double tau = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            double conductance = 1.0 / nodes_[j].r_in;
            if (j + 1 < nodes_.size()) conductance += 1.0 / nodes_[j + 1].r_in;
            if (j + 1 == nodes_.size() && std::isfinite(ambient_resistance_)) {
                conductance += 1.0 / ambient_resistance_;
            }
            tau = std::min(tau, nodes_[j].capacitance / conductance);
        }
        return tau;
    }

    /// Time derivatives of the heat-storing node temperatures.
    void derivatives(double fluid_temp, std::span<const double> temps,
                     std::span<double> dtemps) const {
        const std::size_t n = nodes_.size();
        for (std::size_t j = 0; j < n; ++j) {
            const double t_left = (j == 0) ? fluid_temp : temps[j - 1];
            double flow = (t_left - temps[j]) / nodes_[j].r_in;
            if (j + 1 < n) flow -= (temps[j] - temps[j + 1]) / nodes_[j + 1].r_in;
            if (j + 1 == n && std::isfinite(ambient_resistance_)) {
                flow -= (temps[j] - ambient_temp_) / ambient_resistance_;
            }
            dtemps[j] = flow / nodes_[j].capacitance;
        }
    }

    /// Extract the heat-storing node temperatures from a full per-layer state.
    std::vector<double> gather(const ThermalState& state) const {
        if (state.node_temps.size() != spec_->layers.size()) {
            throw ConfigError("thermal state has " + std::to_string(state.node_temps.size()) +
                              " nodes, spec has " + std::to_string(spec_->layers.size()) +
                              " layers");
        }
        std::vector<double> out(nodes_.size());
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            out[j] = state.node_temps[nodes_[j].layer_index];
        }
        return out;
    }

    /// Rebuild all per-layer node temperatures. Folded (zero capacitance)
    /// nodes sit on a pure resistor chain between two anchors, so their
    /// temperatures interpolate linearly in cumulative resistance.
    void scatter(double fluid_temp, std::span<const double> dynamic_temps,
                 std::vector<double>& node_temps) const {
        node_temps.resize(spec_->layers.size());
        std::size_t layer = 0;
        double anchor_left = fluid_temp;
        for (std::size_t j = 0; j < nodes_.size(); ++j) {
            const double anchor_right = dynamic_temps[j];
            const double total_r = nodes_[j].r_in;
            double run_r = 0.0;
            for (; layer <= nodes_[j].layer_index; ++layer) {
                run_r += spec_->layers[layer].thermal_resistance;
                node_temps[layer] = anchor_left + (anchor_right - anchor_left) * run_r / total_r;
            }
            anchor_left = anchor_right;
        }
    }

    /// Instantaneous heat flow from the fluid into the unit, W.
    double heat_draw(double fluid_temp, double first_dynamic_temp) const {
        return (fluid_temp - first_dynamic_temp) / nodes_.front().r_in;
    }

    std::size_t crystal_dynamic_index() const { return nodes_.size() - 1; }

private:
    struct Node {
        double capacitance;      // J/K
        double r_in;             // K/W from previous dynamic node (or fluid)
        std::size_t layer_index; // position in spec_->layers
    };

    const ThermalUnitSpec* spec_;
    std::vector<Node> nodes_;
    double ambient_temp_ = 0.0;
    double ambient_resistance_ = std::numeric_limits<double>::infinity();
};

/// All node temperatures set to `initial_temp`, zero heating rate.
inline ThermalState build_unit_network(const ThermalUnitSpec& spec, double initial_temp) {
    validate(spec);
    ThermalState state;
    state.node_temps.assign(spec.layers.size(), initial_temp);
    state.crystal_dtdt = 0.0;
    return state;
}

/// Advance the ladder by one step with the fluid held at `fluid_temp`.
/// dt must satisfy the explicit stability guard dt <= tau_min/4.
inline ThermalState thermal_step(const ThermalState& state, const ThermalUnitSpec& spec,
                                 double fluid_temp, double dt) {
    if (!(dt > 0.0)) {
        throw StepSizeError("thermal_step: dt must be > 0");
    }
    ThermalLadder ladder(spec);
    const double tau = ladder.stability_time_constant();
    if (dt > tau / 4.0) {
        std::ostringstream msg;
        msg << "thermal_step: dt=" << dt << " s exceeds stability guard tau/4 ("
            << tau / 4.0 << " s, limiting tau=" << tau << " s)";
        throw StepSizeError(msg.str());
    }

    std::vector<double> temps = ladder.gather(state);
    const double crystal_before = temps[ladder.crystal_dynamic_index()];

    Rk4Workspace ws;
    rk4_step(std::span<const double>(temps), 0.0, dt, std::span<double>(temps),
             [&](double, std::span<const double> y, std::span<double> dydt) {
                 ladder.derivatives(fluid_temp, y, dydt);
             },
             ws);

    ThermalState next;
    ladder.scatter(fluid_temp, std::span<const double>(temps), next.node_temps);
    next.crystal_dtdt = (temps[ladder.crystal_dynamic_index()] - crystal_before) / dt;
    return next;
}

/// Heat flow from the fluid into the unit at the current state, W.
/// Negative when the fluid is colder than the first node.
inline double unit_heat_draw(const ThermalState& state, const ThermalUnitSpec& spec,
                             double fluid_temp) {
    ThermalLadder ladder(spec);
    const auto temps = ladder.gather(state);
    return ladder.heat_draw(fluid_temp, temps.front());
}

/// Largest |dT/dt| seen at the crystal when the unit, initially uniform at
/// `ambient`, is exposed to a constant `fluid_temp` for `horizon` seconds.
/// The ladder is linear, so for a fixed spec the result is affine in
/// (fluid_temp - ambient). The horizon should cover several effective time
/// constants.
inline double peak_crystal_dtdt(const ThermalUnitSpec& spec, double fluid_temp,
                                double ambient, double horizon) {
    if (!(horizon > 0.0)) {
        throw StepSizeError("peak_crystal_dtdt: horizon must be > 0");
    }
    ThermalLadder ladder(spec);
    const double dt = std::min(ladder.stability_time_constant() / 4.0, horizon / 4000.0);

    std::vector<double> temps(ladder.dynamic_count(), ambient);
    Rk4Workspace ws;
    double peak = 0.0;
    double t = 0.0;
    const std::size_t crystal = ladder.crystal_dynamic_index();
    while (t < horizon) {
        const double h = std::min(dt, horizon - t);
        const double before = temps[crystal];
        rk4_step(std::span<const double>(temps), t, h, std::span<double>(temps),
                 [&](double, std::span<const double> y, std::span<double> dydt) {
                     ladder.derivatives(fluid_temp, y, dydt);
                 },
                 ws);
        peak = std::max(peak, std::abs((temps[crystal] - before) / h));
        t += h;
    }
    return peak;
}

} // namespace pyrosim
