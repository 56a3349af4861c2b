#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pyrosim/electrical.hpp"
#include "pyrosim/errors.hpp"
#include "pyrosim/fluid.hpp"
#include "pyrosim/integrate.hpp"
#include "pyrosim/thermal.hpp"

namespace pyrosim {

/// Switch accumulation policy.
///
/// `bipolar` is the physical polarity-blind switch: pull-in closes at
/// |V| >= V_PI in either polarity, and cooling-phase charge of opposite sign
/// can cancel what the load has accumulated.
///
/// `unipolar_gated` is an idealized ratchet that produces the monotone
/// accumulation seen on storage capacitors: the switch may close only while
/// the crystal is charging the load upward (positive current, shared voltage
/// not below the stored one, so the effective closure threshold is
/// max(V_PI, V_load)), and it reopens at the charging apex, freezing the load
/// at its running maximum.
enum class AccumulationMode { bipolar, unipolar_gated };

struct UnitConfig {
    ThermalUnitSpec thermal;
    ElectricalNetworkSpec electrical;
    std::optional<ActuatorSpec> actuator;
};

struct ScenarioConfig {
    FluidChainSpec fluid;
    std::vector<UnitConfig> units;
    double ambient_temp = 303.15;  // K, initial uniform temperature
    double dt = 5e-3;              // s
    double t_end = 600.0;          // s
    double event_tolerance = 0.01; // V
    AccumulationMode accumulation_mode = AccumulationMode::unipolar_gated;
};

struct UnitSample {
    double fluid_temp = 0.0;    // K
    double crystal_temp = 0.0;  // K
    double pyro_voltage = 0.0;  // V
    bool switch_closed = false;
    double load_voltage = 0.0;  // V
    double load_energy = 0.0;   // J
    double displacement = 0.0;  // m
};

struct TraceRow {
    double time = 0.0;       // s
    double inlet_temp = 0.0; // K
    std::vector<UnitSample> units;
};

enum class SwitchEventKind { closure, opening };

struct SwitchEvent {
    double time = 0.0;
    std::size_t unit = 0;
    SwitchEventKind kind = SwitchEventKind::closure;
    double pyro_voltage = 0.0; // at the localized event time, before charge share
};

/// Per-step fluid bookkeeping for the chain energy audit.
struct FlowHistory {
    std::vector<double> step_dt;
    std::vector<double> inlet_temp;   // K, step average
    std::vector<double> outlet_temp;  // K, step average
    std::vector<double> draw_watts;   // total over units, step average
};

struct Trace {
    std::vector<TraceRow> rows;
    std::vector<SwitchEvent> events;
    FlowHistory flow;
};

struct ScenarioSummary {
    double max_load_voltage = 0.0;  // V, magnitude
    double max_stored_energy = 0.0; // J
    double max_displacement = 0.0;  // m
};

inline ScenarioSummary summarize(const Trace& trace) {
    ScenarioSummary s;
    for (const auto& row : trace.rows) {
        for (const auto& u : row.units) {
            s.max_load_voltage = std::max(s.max_load_voltage, std::abs(u.load_voltage));
            s.max_stored_energy = std::max(s.max_stored_energy, u.load_energy);
            s.max_displacement = std::max(s.max_displacement, u.displacement);
        }
    }
    return s;
}

inline void validate(const ScenarioConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw ConfigError("sim: dt must be > 0");
    if (!(cfg.t_end > cfg.dt)) throw ConfigError("sim: t_end must be > dt");
    if (!(cfg.event_tolerance > 0.0)) throw ConfigError("sim: event_tolerance must be > 0");
    validate(cfg.fluid);
    if (cfg.units.size() != cfg.fluid.unit_count) {
        throw ConfigError("scenario: units length (" + std::to_string(cfg.units.size()) +
                          ") must equal fluid unit_count (" +
                          std::to_string(cfg.fluid.unit_count) + ")");
    }
    for (std::size_t i = 0; i < cfg.units.size(); ++i) {
        const std::string where = "unit " + std::to_string(i) + ": ";
        try {
            validate(cfg.units[i].thermal);
            validate(cfg.units[i].electrical);
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
        const bool wants_actuator = cfg.units[i].electrical.load_kind == LoadKind::actuator;
        if (wants_actuator && !cfg.units[i].actuator) {
            throw ConfigError(where + "load_kind=actuator requires an actuator block");
        }
        if (!wants_actuator && cfg.units[i].actuator) {
            throw ConfigError(where + "actuator block requires load_kind=actuator");
        }
        if (cfg.units[i].actuator) {
            if (!(cfg.units[i].actuator->quad_coeff >= 0.0) ||
                !(cfg.units[i].actuator->capacitance >= 0.0)) {
                throw ConfigError(where + "actuator coefficients must be >= 0");
            }
        }
    }
}

/// Bisection on a (re-integrated) voltage trajectory: finds t* in [t0, t1]
/// with |V(t*) - threshold| <= tolerance, assuming the threshold is crossed
/// inside the bracket. V(t0) exactly at the threshold returns t0.
template <typename VoltageFn>
double localize_event(VoltageFn&& voltage_at, double t0, double t1, double threshold,
                      double tolerance) {
    if (!(t1 > t0)) {
        throw std::logic_error("localize_event: interval must have positive width");
    }
    const double g0 = voltage_at(t0) - threshold;
    if (g0 == 0.0) return t0;
    const double g1 = voltage_at(t1) - threshold;
    if (g1 != 0.0 && (g0 > 0.0) == (g1 > 0.0)) {
        throw std::logic_error("localize_event: no crossing in bracket");
    }
    double lo = t0, hi = t1;
    double g_lo = g0;
    double mid = t1;
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        if (!(mid > lo) || !(mid < hi)) return hi;
        const double gm = voltage_at(mid) - threshold;
        if (std::abs(gm) <= tolerance) return mid;
        if ((gm > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = gm;
        } else {
            hi = mid;
        }
    }
    return mid;
}

namespace detail {

/// Generic sign-change bisection used by the engine's event loop. `g` fires
/// when it reaches >= 0; g(ta) < 0 <= g_at_tb. Returns a time on the firing
/// side of the crossing with g <= g_tolerance (or the collapsed bracket
/// edge), so the event condition genuinely holds at the returned time.
template <typename EventFn>
double bisect_event(EventFn&& g, double ta, double tb, double g_at_tb, double g_tolerance) {
    double lo = ta, hi = tb, g_hi = g_at_tb;
    for (int iter = 0; iter < 120; ++iter) {
        if (g_hi <= g_tolerance) return hi;
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo) || !(mid < hi)) return hi;
        const double gm = g(mid);
        if (gm >= 0.0) {
            hi = mid;
            g_hi = gm;
        } else {
            lo = mid;
        }
    }
    return hi;
}

} // namespace detail

/// Run one scenario: the fluid chain, every unit's thermal ladder and
/// electrical node advance as a single coupled system on a fixed grid, with
/// switch transitions localized by bisection between grid points. The fluid
/// temperatures are algebraic functions of the instantaneous states (plug
/// flow), evaluated inside every integrator stage, so the smooth dynamics
/// carry the full order of the four-stage stepper. Identical inputs produce
/// bit-identical traces.
inline Trace run_scenario(const ScenarioConfig& cfg) {
    validate(cfg);

    struct UnitRt {
        ThermalLadder ladder;
        ElectricalNetworkSpec net; // store_capacitance includes the actuator when present
        const ActuatorSpec* actuator;
        double c_node;
        double v_pull_in;
        double v_release;
        std::size_t offset; // packed state: [dynamic temps..., pyro voltage]
        std::size_t dyn;
    };

    const std::size_t n_units = cfg.units.size();
    std::vector<UnitRt> rt;
    rt.reserve(n_units);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < n_units; ++i) {
        const auto& unit = cfg.units[i];
        ElectricalNetworkSpec net = unit.electrical;
        if (unit.actuator) net.store_capacitance += unit.actuator->capacitance;
        UnitRt u{ThermalLadder(unit.thermal),
                 net,
                 unit.actuator ? &*unit.actuator : nullptr,
                 net.crystal.self_capacitance + net.parasitic_capacitance,
                 pull_in_voltage(net.sw),
                 net.sw.release_voltage,
                 dim,
                 0};
        u.dyn = u.ladder.dynamic_count();
        dim += u.dyn + 1;
        rt.push_back(std::move(u));

        const std::string where = "unit " + std::to_string(i) + ": ";
        const double tau_thermal = rt.back().ladder.stability_time_constant();
        if (cfg.dt > tau_thermal / 4.0) {
            std::ostringstream msg;
            msg << where << "dt=" << cfg.dt << " s exceeds thermal stability guard tau/4 ("
                << tau_thermal / 4.0 << " s, limiting tau=" << tau_thermal << " s)";
            throw StepSizeError(msg.str());
        }
        if (std::isfinite(net.leak_resistance)) {
            const double tau_elec = net.leak_resistance * rt.back().c_node;
            if (cfg.dt > tau_elec / 10.0) {
                std::ostringstream msg;
                msg << where << "dt=" << cfg.dt << " s exceeds electrical guard R_leak*C/10 ("
                    << tau_elec / 10.0 << " s)";
                throw StepSizeError(msg.str());
            }
        }
    }

    std::vector<double> y(dim, 0.0);
    for (const auto& u : rt) {
        for (std::size_t j = 0; j < u.dyn; ++j) y[u.offset + j] = cfg.ambient_temp;
    }
    std::vector<SwitchPhase> phase(n_units, SwitchPhase::open);
    std::vector<double> load_v(n_units, 0.0);

    const bool gated = cfg.accumulation_mode == AccumulationMode::unipolar_gated;
    const auto& schedule = cfg.fluid.schedule;

    std::vector<double> fluid_buf(n_units), draw_buf(n_units);
    // Plug flow pass: fluid temperature and heat draw at each unit for the
    // instantaneous states. Downstream units see the inlet minus the
    // depletion by everything upstream.
    const auto chain = [&](double t, std::span<const double> yy, std::span<double> fluid,
                           std::span<double> draws) {
        double cumulative = 0.0;
        for (std::size_t i = 0; i < n_units; ++i) {
            const double t_seen =
                std::max(0.0, t - static_cast<double>(i) * cfg.fluid.transit_delay_per_unit);
            const double f =
                inlet_temperature(schedule, t_seen) - cumulative / cfg.fluid.heat_capacity_rate;
            const double draw = rt[i].ladder.heat_draw(f, yy[rt[i].offset]);
            fluid[i] = f;
            draws[i] = draw;
            cumulative += draw;
        }
    };

    const auto rhs = [&](double t, std::span<const double> yy, std::span<double> dydt) {
        chain(t, yy, fluid_buf, draw_buf);
        for (std::size_t i = 0; i < n_units; ++i) {
            const auto& u = rt[i];
            const auto temps = yy.subspan(u.offset, u.dyn);
            const auto dtemps = dydt.subspan(u.offset, u.dyn);
            u.ladder.derivatives(fluid_buf[i], temps, dtemps);
            const double i_pyro = pyro_current(u.net.crystal, dtemps[u.dyn - 1]);
            const double v = yy[u.offset + u.dyn];
            const double c_eff = u.c_node + (phase[i] == SwitchPhase::closed
                                                 ? u.net.store_capacitance
                                                 : 0.0);
            const double leak =
                std::isfinite(u.net.leak_resistance) ? v / u.net.leak_resistance : 0.0;
            dydt[u.offset + u.dyn] = (i_pyro - leak) / c_eff;
        }
    };

    Rk4Workspace ws;
    std::vector<double> scratch(dim);
    const auto integrate_to = [&](std::span<const double> from, double ta, double h,
                                  std::span<double> to) {
        rk4_step(from, ta, h, to, rhs, ws);
    };

    // dV/dt of one unit under the current phase assignment.
    const auto unit_vdot = [&](std::size_t i, double t, std::span<const double> yy) {
        rhs(t, yy, std::span<double>(scratch));
        return scratch[rt[i].offset + rt[i].dyn];
    };

    Trace trace;
    trace.rows.reserve(static_cast<std::size_t>(cfg.t_end / cfg.dt) + 16);

    const auto append_row = [&](double t_row) {
        chain(t_row, y, fluid_buf, draw_buf);
        TraceRow row;
        row.time = t_row;
        row.inlet_temp = inlet_temperature(schedule, t_row);
        row.units.resize(n_units);
        for (std::size_t i = 0; i < n_units; ++i) {
            const auto& u = rt[i];
            UnitSample& s = row.units[i];
            s.fluid_temp = fluid_buf[i];
            s.crystal_temp = y[u.offset + u.dyn - 1];
            s.pyro_voltage = y[u.offset + u.dyn];
            s.switch_closed = phase[i] == SwitchPhase::closed;
            s.load_voltage = s.switch_closed ? s.pyro_voltage : load_v[i];
            s.load_energy = stored_energy(u.net.store_capacitance, s.load_voltage);
            s.displacement = u.actuator ? actuator_displacement(*u.actuator, s.load_voltage) : 0.0;
        }
        if (!trace.rows.empty() && trace.rows.back().time == t_row) {
            trace.rows.back() = std::move(row);
        } else {
            trace.rows.push_back(std::move(row));
        }
    };

    const auto record_flow = [&](double ta, std::span<const double> ya, double tb,
                                 std::span<const double> yb) {
        double inlet_a, outlet_a, draw_a, inlet_b, outlet_b, draw_b;
        const auto sample = [&](double t, std::span<const double> yy, double& inlet,
                                double& outlet, double& draw) {
            chain(t, yy, fluid_buf, draw_buf);
            inlet = inlet_temperature(schedule, t);
            double total = 0.0;
            for (double d : draw_buf) total += d;
            draw = total;
            outlet = fluid_buf[n_units - 1] - draw_buf[n_units - 1] / cfg.fluid.heat_capacity_rate;
        };
        sample(ta, ya, inlet_a, outlet_a, draw_a);
        sample(tb, yb, inlet_b, outlet_b, draw_b);
        trace.flow.step_dt.push_back(tb - ta);
        trace.flow.inlet_temp.push_back(0.5 * (inlet_a + inlet_b));
        trace.flow.outlet_temp.push_back(0.5 * (outlet_a + outlet_b));
        trace.flow.draw_watts.push_back(0.5 * (draw_a + draw_b));
    };

    // Event function per unit: fires (crosses from < 0 to >= 0) when the
    // switch must transition under the active mode.
    const auto event_value = [&](std::size_t i, double t, std::span<const double> yy) {
        const auto& u = rt[i];
        const double v = yy[u.offset + u.dyn];
        if (phase[i] == SwitchPhase::open) {
            if (gated) {
                return v - std::max(u.v_pull_in, load_v[i]);
            }
            return std::abs(v) - u.v_pull_in;
        }
        if (gated) {
            return -unit_vdot(i, t, yy); // apex: charging stopped
        }
        return u.v_release - std::abs(v);
    };

    std::vector<double> y_trial(dim), y_event(dim);

    // Advance from ta to tb, localizing and applying switch transitions.
    const auto advance = [&](double ta, double tb) {
        double t0 = ta;
        while (t0 < tb) {
            const double h = tb - t0;
            integrate_to(y, t0, h, std::span<double>(y_trial));

            // Earliest event over all units, if any.
            double t_star = std::numeric_limits<double>::infinity();
            std::size_t unit_star = 0;
            bool found = false;
            for (std::size_t i = 0; i < n_units; ++i) {
                const double g0 = event_value(i, t0, y);
                if (!(g0 < 0.0)) continue; // not armed on this segment
                const double g1 = event_value(i, tb, y_trial);
                if (!(g1 >= 0.0)) continue;
                const bool voltage_event = !(gated && phase[i] == SwitchPhase::closed);
                const double g_tol = voltage_event ? cfg.event_tolerance : 0.0;
                const double t_hit = detail::bisect_event(
                    [&](double tm) {
                        integrate_to(y, t0, tm - t0, std::span<double>(y_event));
                        return event_value(i, tm, y_event);
                    },
                    t0, tb, g1, g_tol);
                if (t_hit < t_star) {
                    t_star = t_hit;
                    unit_star = i;
                    found = true;
                }
            }

            if (!found) {
                record_flow(t0, y, tb, y_trial);
                std::copy(y_trial.begin(), y_trial.end(), y.begin());
                for (std::size_t i = 0; i < n_units; ++i) {
                    if (phase[i] == SwitchPhase::closed) load_v[i] = y[rt[i].offset + rt[i].dyn];
                }
                return;
            }

            // Commit up to the event time, then transition.
            integrate_to(y, t0, t_star - t0, std::span<double>(y_event));
            record_flow(t0, y, t_star, y_event);
            std::copy(y_event.begin(), y_event.end(), y.begin());
            for (std::size_t i = 0; i < n_units; ++i) {
                if (phase[i] == SwitchPhase::closed) load_v[i] = y[rt[i].offset + rt[i].dyn];
            }

            const auto& u = rt[unit_star];
            double& v = y[u.offset + u.dyn];
            if (phase[unit_star] == SwitchPhase::open) {
                bool close = true;
                if (gated) {
                    // Suppress closures that would immediately discharge: the
                    // shared node must still be charging upward.
                    const double common = charge_share(v, load_v[unit_star], u.net);
                    const double i_pyro_now =
                        unit_vdot(unit_star, t_star, y) * u.c_node +
                        (std::isfinite(u.net.leak_resistance) ? v / u.net.leak_resistance : 0.0);
                    const double leak_common = std::isfinite(u.net.leak_resistance)
                                                   ? common / u.net.leak_resistance
                                                   : 0.0;
                    close = (i_pyro_now - leak_common) > 0.0;
                }
                if (close) {
                    trace.events.push_back(
                        {t_star, unit_star, SwitchEventKind::closure, v});
                    const double common = charge_share(v, load_v[unit_star], u.net);
                    v = common;
                    load_v[unit_star] = common;
                    phase[unit_star] = SwitchPhase::closed;
                    // A share onto a large store can land below the release
                    // voltage; the physical switch then reopens at once.
                    if (!gated && std::abs(common) < u.v_release) {
                        trace.events.push_back(
                            {t_star, unit_star, SwitchEventKind::opening, common});
                        phase[unit_star] = SwitchPhase::open;
                    }
                }
            } else {
                load_v[unit_star] = v;
                trace.events.push_back({t_star, unit_star, SwitchEventKind::opening, v});
                phase[unit_star] = SwitchPhase::open;
            }
            append_row(t_star);
            t0 = t_star;
        }
    };

    append_row(0.0);
    const auto steps = static_cast<long long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    for (long long k = 0; k < steps; ++k) {
        const double t0 = static_cast<double>(k) * cfg.dt;
        const double t1 = (k + 1 == steps) ? cfg.t_end : static_cast<double>(k + 1) * cfg.dt;
        advance(t0, t1);
        append_row(t1);
    }
    return trace;
}

struct SweepPoint {
    double value = 0.0;
    double max_load_voltage = 0.0;  // V
    double max_stored_energy = 0.0; // J
};

/// Resolve a dotted parameter path ("units.0.electrical.store_capacitance",
/// "fluid.schedule.hot_temp", ...) into a setter over ScenarioConfig. All
/// values are SI. "units.*" addresses every unit.
inline std::function<void(ScenarioConfig&, double)> resolve_parameter(std::string_view path) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= path.size()) {
        const auto dot = path.find('.', start);
        const auto end = dot == std::string_view::npos ? path.size() : dot;
        tokens.emplace_back(path.substr(start, end - start));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    const auto fail = [&]() -> std::function<void(ScenarioConfig&, double)> {
        throw ConfigError("sweep: unknown parameter path '" + std::string(path) + "'");
    };

    if (tokens.size() == 1) {
        if (tokens[0] == "ambient_temp") return [](ScenarioConfig& c, double v) { c.ambient_temp = v; };
        if (tokens[0] == "dt") return [](ScenarioConfig& c, double v) { c.dt = v; };
        if (tokens[0] == "t_end") return [](ScenarioConfig& c, double v) { c.t_end = v; };
        if (tokens[0] == "event_tolerance") {
            return [](ScenarioConfig& c, double v) { c.event_tolerance = v; };
        }
        return fail();
    }
    if (tokens[0] == "fluid") {
        if (tokens.size() == 2) {
            if (tokens[1] == "heat_capacity_rate") {
                return [](ScenarioConfig& c, double v) { c.fluid.heat_capacity_rate = v; };
            }
            if (tokens[1] == "transit_delay_per_unit") {
                return [](ScenarioConfig& c, double v) { c.fluid.transit_delay_per_unit = v; };
            }
        }
        if (tokens.size() == 3 && tokens[1] == "schedule") {
            if (tokens[2] == "hot_temp") {
                return [](ScenarioConfig& c, double v) { c.fluid.schedule.hot_temp = v; };
            }
            if (tokens[2] == "cold_temp") {
                return [](ScenarioConfig& c, double v) { c.fluid.schedule.cold_temp = v; };
            }
            if (tokens[2] == "period") {
                return [](ScenarioConfig& c, double v) { c.fluid.schedule.period = v; };
            }
            if (tokens[2] == "phase") {
                return [](ScenarioConfig& c, double v) { c.fluid.schedule.phase = v; };
            }
        }
        return fail();
    }
    if (tokens[0] != "units" || tokens.size() < 4) return fail();

    std::vector<std::size_t> unit_indices;
    const bool all_units = tokens[1] == "*";
    if (!all_units) {
        try {
            unit_indices.push_back(static_cast<std::size_t>(std::stoul(tokens[1])));
        } catch (const std::exception&) {
            return fail();
        }
    }
    const auto per_unit = [all_units, unit_indices,
                           path](auto&& set) -> std::function<void(ScenarioConfig&, double)> {
        return [all_units, unit_indices, set, path](ScenarioConfig& c, double v) {
            std::vector<std::size_t> targets = unit_indices;
            if (all_units) {
                targets.resize(c.units.size());
                for (std::size_t i = 0; i < c.units.size(); ++i) targets[i] = i;
            }
            for (std::size_t i : targets) {
                if (i >= c.units.size()) {
                    throw ConfigError("sweep: unit index out of range in '" + std::string(path) +
                                      "'");
                }
                set(c.units[i], v);
            }
        };
    };

    if (tokens[2] == "electrical") {
        if (tokens.size() == 4) {
            if (tokens[3] == "store_capacitance") {
                return per_unit([](UnitConfig& u, double v) { u.electrical.store_capacitance = v; });
            }
            if (tokens[3] == "parasitic_capacitance") {
                return per_unit(
                    [](UnitConfig& u, double v) { u.electrical.parasitic_capacitance = v; });
            }
            if (tokens[3] == "leak_resistance") {
                return per_unit([](UnitConfig& u, double v) { u.electrical.leak_resistance = v; });
            }
        }
        if (tokens.size() == 5 && tokens[3] == "switch") {
            if (tokens[4] == "pull_in_voltage") {
                return per_unit([](UnitConfig& u, double v) { u.electrical.sw.pull_in_voltage = v; });
            }
            if (tokens[4] == "release_voltage") {
                return per_unit([](UnitConfig& u, double v) { u.electrical.sw.release_voltage = v; });
            }
            if (tokens[4] == "contact_resistance") {
                return per_unit(
                    [](UnitConfig& u, double v) { u.electrical.sw.contact_resistance = v; });
            }
        }
        return fail();
    }
    if (tokens[2] == "thermal") {
        if (tokens.size() == 4 && tokens[3] == "ambient_loss_resistance") {
            return per_unit([](UnitConfig& u, double v) { u.thermal.ambient_loss_resistance = v; });
        }
        if (tokens.size() == 6 && tokens[3] == "layers") {
            std::size_t layer = 0;
            try {
                layer = static_cast<std::size_t>(std::stoul(tokens[4]));
            } catch (const std::exception&) {
                return fail();
            }
            const std::string field = tokens[5];
            if (field == "thermal_resistance" || field == "thermal_capacitance") {
                return per_unit([layer, field, path](UnitConfig& u, double v) {
                    if (layer >= u.thermal.layers.size()) {
                        throw ConfigError("sweep: layer index out of range in '" +
                                          std::string(path) + "'");
                    }
                    if (field == "thermal_resistance") {
                        u.thermal.layers[layer].thermal_resistance = v;
                    } else {
                        u.thermal.layers[layer].thermal_capacitance = v;
                    }
                });
            }
        }
        return fail();
    }
    if (tokens[2] == "actuator" && tokens.size() == 4) {
        if (tokens[3] == "quad_coeff" || tokens[3] == "capacitance") {
            const std::string field = tokens[3];
            return per_unit([field, path](UnitConfig& u, double v) {
                if (!u.actuator) {
                    throw ConfigError("sweep: unit has no actuator block ('" + std::string(path) +
                                      "')");
                }
                if (field == "quad_coeff") {
                    u.actuator->quad_coeff = v;
                } else {
                    u.actuator->capacitance = v;
                }
            });
        }
    }
    return fail();
}

/// Run the prepared scenarios (typically variants of one template) and
/// summarize each. Scenarios execute concurrently; results are merged in
/// input order, so the output is deterministic.
inline std::vector<SweepPoint> run_sweep(const std::vector<ScenarioConfig>& configs,
                                         std::span<const double> values) {
    if (configs.size() != values.size()) {
        throw ConfigError("sweep: configs and values must have equal length");
    }
    std::vector<std::future<ScenarioSummary>> futures;
    futures.reserve(configs.size());
    for (const auto& cfg : configs) {
        futures.push_back(
            std::async(std::launch::async, [cfg]() { return summarize(run_scenario(cfg)); }));
    }
    std::vector<SweepPoint> points;
    points.reserve(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto summary = futures[i].get();
        points.push_back({values[i], summary.max_load_voltage, summary.max_stored_energy});
    }
    return points;
}

/// One run per value of the addressed parameter.
inline std::vector<SweepPoint> sweep(const ScenarioConfig& base, std::string_view parameter_path,
                                     std::span<const double> values) {
    const auto setter = resolve_parameter(parameter_path);
    std::vector<ScenarioConfig> configs;
    configs.reserve(values.size());
    for (double v : values) {
        ScenarioConfig cfg = base;
        setter(cfg, v);
        configs.push_back(std::move(cfg));
    }
    return run_sweep(configs, values);
}

} // namespace pyrosim
