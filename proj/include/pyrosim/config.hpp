#pragma once

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pyrosim/defaults.hpp"
#include "pyrosim/engine.hpp"
#include "pyrosim/errors.hpp"
#include "pyrosim/units.hpp"

// Scenario configuration files are JSON documents in human units: Celsius
// temperatures, picofarad capacitances, millimetre/micrometre geometry (the
// unit is part of the key name, e.g. "store_pF"). Parsing converts to SI,
// applies documented defaults for anything omitted, and rejects unknown keys.

namespace pyrosim {

using ConfigDocument = nlohmann::ordered_json;

struct ParsedConfig {
    ScenarioConfig config;
    std::vector<std::string> notes; // one line per applied default
};

namespace cfgdetail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config error at " + (path.empty() ? "<root>" : path) + ": " + what);
}

inline std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

inline void require_object(const ConfigDocument& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

inline void reject_unknown_keys(const ConfigDocument& obj, const std::string& path,
                                std::initializer_list<std::string_view> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (auto a : allowed) {
            if (it.key() == a) {
                known = true;
                break;
            }
        }
        if (!known) fail(join(path, it.key()), "unknown key");
    }
}

inline double number_field(const ConfigDocument& obj, const std::string& path,
                           const std::string& key) {
    const auto& j = obj.at(key);
    if (!j.is_number()) fail(join(path, key), "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(join(path, key), "must be finite");
    return v;
}

inline std::string string_field(const ConfigDocument& obj, const std::string& path,
                                const std::string& key) {
    const auto& j = obj.at(key);
    if (!j.is_string()) fail(join(path, key), "expected a string");
    return j.get<std::string>();
}

/// Resistances may be the string "inf" for an absent path.
inline double resistance_field(const ConfigDocument& obj, const std::string& path,
                               const std::string& key) {
    const auto& j = obj.at(key);
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
        fail(join(path, key), "expected a number or \"inf\"");
    }
    return number_field(obj, path, key);
}

template <typename T>
void note_default(std::vector<std::string>& notes, const std::string& path, T value) {
    std::ostringstream os;
    os << "applied default: " << path << " = " << value;
    notes.push_back(os.str());
}

inline InletSchedule parse_schedule(const ConfigDocument& j, const std::string& path,
                                    std::vector<std::string>& notes) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"waveform", "hot_C", "cold_C", "period_s", "phase_s"});
    InletSchedule s;
    if (j.contains("waveform")) {
        const auto w = string_field(j, path, "waveform");
        if (w == "square") {
            s.waveform = Waveform::square;
        } else if (w == "sine") {
            s.waveform = Waveform::sine;
        } else if (w == "constant") {
            s.waveform = Waveform::constant;
        } else {
            fail(join(path, "waveform"), "expected one of square, sine, constant");
        }
    } else {
        s.waveform = Waveform::square;
        note_default(notes, join(path, "waveform"), "square");
    }
    if (j.contains("hot_C")) {
        s.hot_temp = celsius_to_kelvin(number_field(j, path, "hot_C"));
    } else {
        s.hot_temp = defaults::hot_temp;
        note_default(notes, join(path, "hot_C"), kelvin_to_celsius(defaults::hot_temp));
    }
    if (j.contains("cold_C")) {
        s.cold_temp = celsius_to_kelvin(number_field(j, path, "cold_C"));
    } else {
        s.cold_temp = defaults::cold_temp;
        note_default(notes, join(path, "cold_C"), kelvin_to_celsius(defaults::cold_temp));
    }
    if (j.contains("period_s")) {
        s.period = number_field(j, path, "period_s");
    } else {
        s.period = defaults::period;
        if (s.waveform != Waveform::constant) {
            note_default(notes, join(path, "period_s"), defaults::period);
        }
    }
    if (j.contains("phase_s")) {
        s.phase = number_field(j, path, "phase_s");
    } else {
        s.phase = 0.0;
    }
    if (!(s.hot_temp >= s.cold_temp)) fail(path, "hot_C must be >= cold_C");
    if (s.waveform != Waveform::constant && !(s.period > 0.0)) {
        fail(join(path, "period_s"), "must be > 0");
    }
    return s;
}

inline ThermalUnitSpec parse_thermal(const ConfigDocument& j, const std::string& path,
                                     double ambient_temp, std::vector<std::string>& notes) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"layers", "ambient_loss_R_K_per_W"});
    ThermalUnitSpec t = defaults::thermal_unit(ambient_temp);
    if (j.contains("layers")) {
        const auto& layers = j.at("layers");
        if (!layers.is_array() || layers.empty()) {
            fail(join(path, "layers"), "expected a nonempty array");
        }
        t.layers.clear();
        for (std::size_t i = 0; i < layers.size(); ++i) {
            const std::string lpath = join(path, "layers[" + std::to_string(i) + "]");
            const auto& lj = layers[i];
            require_object(lj, lpath);
            reject_unknown_keys(lj, lpath, {"label", "R_K_per_W", "C_J_per_K"});
            ThermalLayerSpec layer;
            const auto label = lj.contains("label") ? string_field(lj, lpath, "label")
                                                    : std::string("crystal");
            if (label == "channel") {
                layer.label = LayerKind::channel;
            } else if (label == "adhesive") {
                layer.label = LayerKind::adhesive;
            } else if (label == "crystal") {
                layer.label = LayerKind::crystal;
            } else {
                fail(join(lpath, "label"), "expected one of channel, adhesive, crystal");
            }
            if (!lj.contains("R_K_per_W")) fail(lpath, "missing R_K_per_W");
            layer.thermal_resistance = number_field(lj, lpath, "R_K_per_W");
            if (!lj.contains("C_J_per_K")) fail(lpath, "missing C_J_per_K");
            layer.thermal_capacitance = number_field(lj, lpath, "C_J_per_K");
            t.layers.push_back(layer);
        }
    } else {
        note_default(notes, join(path, "layers"),
                     "channel/adhesive/crystal ladder from device geometry");
    }
    if (j.contains("ambient_loss_R_K_per_W")) {
        t.ambient_loss_resistance = resistance_field(j, path, "ambient_loss_R_K_per_W");
    } else {
        t.ambient_loss_resistance = std::numeric_limits<double>::infinity();
    }
    return t;
}

inline CrystalSpec parse_crystal(const ConfigDocument& j, const std::string& path,
                                 std::vector<std::string>& notes) {
    require_object(j, path);
    reject_unknown_keys(j, path,
                        {"pyro_coeff_C_per_m2K", "electrode_area_mm2", "thickness_mm",
                         "rel_permittivity", "self_capacitance_pF"});
    CrystalSpec c = defaults::crystal();
    if (j.contains("pyro_coeff_C_per_m2K")) {
        c.pyro_coeff = number_field(j, path, "pyro_coeff_C_per_m2K");
    }
    if (j.contains("electrode_area_mm2")) {
        c.electrode_area = number_field(j, path, "electrode_area_mm2") / 1e6;
    }
    if (j.contains("thickness_mm")) {
        c.thickness = number_field(j, path, "thickness_mm") / 1e3;
    }
    if (j.contains("rel_permittivity")) {
        c.rel_permittivity = number_field(j, path, "rel_permittivity");
    }
    if (j.contains("self_capacitance_pF")) {
        c.self_capacitance = number_field(j, path, "self_capacitance_pF") / 1e12;
    } else {
        c.self_capacitance =
            derived_self_capacitance(c.electrode_area, c.thickness, c.rel_permittivity);
        note_default(notes, join(path, "self_capacitance_pF"),
                     c.self_capacitance * 1e12); // derived from geometry
    }
    return c;
}

inline SwitchSpec parse_switch(const ConfigDocument& j, const std::string& path,
                               std::vector<std::string>& notes) {
    require_object(j, path);
    reject_unknown_keys(j, path,
                        {"pull_in_V", "release_V", "contact_ohm", "gap_um",
                         "actuation_area_mm2", "spring_N_per_m"});
    SwitchSpec sw;
    if (j.contains("pull_in_V")) sw.pull_in_voltage = number_field(j, path, "pull_in_V");
    if (j.contains("gap_um")) sw.gap = number_field(j, path, "gap_um") / 1e6;
    if (j.contains("actuation_area_mm2")) {
        sw.actuation_area = number_field(j, path, "actuation_area_mm2") / 1e6;
    }
    if (j.contains("spring_N_per_m")) {
        sw.spring_constant = number_field(j, path, "spring_N_per_m");
    }
    const bool has_geometry = sw.gap && sw.actuation_area && sw.spring_constant;
    if (!sw.pull_in_voltage && !has_geometry) {
        sw.pull_in_voltage = defaults::pull_in_voltage;
        note_default(notes, join(path, "pull_in_V"), defaults::pull_in_voltage);
    }
    const double v_pi = pull_in_voltage(sw);
    if (j.contains("release_V")) {
        sw.release_voltage = number_field(j, path, "release_V");
    } else {
        sw.release_voltage = defaults::release_fraction * v_pi;
        note_default(notes, join(path, "release_V"), sw.release_voltage);
    }
    if (j.contains("contact_ohm")) {
        sw.contact_resistance = number_field(j, path, "contact_ohm");
    } else {
        sw.contact_resistance = defaults::contact_resistance;
        note_default(notes, join(path, "contact_ohm"), defaults::contact_resistance);
    }
    return sw;
}

inline ActuatorSpec parse_actuator(const ConfigDocument& j, const std::string& path,
                                   std::vector<std::string>& /*notes*/) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"capacitance_pF", "quad_coeff_m_per_V2", "calibration"});
    ActuatorSpec act;
    if (j.contains("capacitance_pF")) {
        act.capacitance = number_field(j, path, "capacitance_pF") / 1e12;
    }
    const bool has_coeff = j.contains("quad_coeff_m_per_V2");
    const bool has_cal = j.contains("calibration");
    if (has_coeff == has_cal) {
        fail(path, "provide exactly one of quad_coeff_m_per_V2, calibration");
    }
    if (has_coeff) {
        act.quad_coeff = number_field(j, path, "quad_coeff_m_per_V2");
    } else {
        const std::string cpath = join(path, "calibration");
        const auto& cj = j.at("calibration");
        require_object(cj, cpath);
        reject_unknown_keys(cj, cpath, {"displacement_um", "at_V"});
        if (!cj.contains("displacement_um") || !cj.contains("at_V")) {
            fail(cpath, "needs displacement_um and at_V");
        }
        const double disp = number_field(cj, cpath, "displacement_um") / 1e6;
        const double volts = number_field(cj, cpath, "at_V");
        if (volts == 0.0) fail(join(cpath, "at_V"), "must be nonzero");
        act.quad_coeff = disp / (volts * volts);
    }
    return act;
}

inline UnitConfig parse_unit(const ConfigDocument& j, const std::string& path,
                             double ambient_temp, std::vector<std::string>& notes) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"repeat", "thermal", "electrical", "actuator"});

    UnitConfig unit;
    if (j.contains("thermal")) {
        unit.thermal = parse_thermal(j.at("thermal"), join(path, "thermal"), ambient_temp, notes);
    } else {
        unit.thermal = defaults::thermal_unit(ambient_temp);
        note_default(notes, join(path, "thermal"), "geometry-derived ladder");
    }

    ElectricalNetworkSpec net;
    if (j.contains("electrical")) {
        const std::string epath = join(path, "electrical");
        const auto& ej = j.at("electrical");
        require_object(ej, epath);
        reject_unknown_keys(ej, epath,
                            {"crystal", "store_pF", "parasitic_pF", "leak_ohm", "load_kind",
                             "switch"});
        if (ej.contains("crystal")) {
            net.crystal = parse_crystal(ej.at("crystal"), join(epath, "crystal"), notes);
        } else {
            net.crystal = defaults::crystal();
            note_default(notes, join(epath, "crystal"), "5 mm LiNbO3 cube");
        }
        if (ej.contains("store_pF")) {
            net.store_capacitance = number_field(ej, epath, "store_pF") / 1e12;
        } else {
            net.store_capacitance = defaults::store_capacitance;
            note_default(notes, join(epath, "store_pF"), defaults::store_capacitance * 1e12);
        }
        if (ej.contains("parasitic_pF")) {
            net.parasitic_capacitance = number_field(ej, epath, "parasitic_pF") / 1e12;
        } else {
            net.parasitic_capacitance = defaults::parasitic_capacitance;
            note_default(notes, join(epath, "parasitic_pF"),
                         defaults::parasitic_capacitance * 1e12);
        }
        if (ej.contains("leak_ohm")) {
            net.leak_resistance = resistance_field(ej, epath, "leak_ohm");
        } else {
            net.leak_resistance = defaults::leak_resistance;
            note_default(notes, join(epath, "leak_ohm"), defaults::leak_resistance);
        }
        if (ej.contains("load_kind")) {
            const auto kind = string_field(ej, epath, "load_kind");
            if (kind == "capacitor") {
                net.load_kind = LoadKind::capacitor;
            } else if (kind == "actuator") {
                net.load_kind = LoadKind::actuator;
            } else {
                fail(join(epath, "load_kind"), "expected one of capacitor, actuator");
            }
        } else {
            net.load_kind = LoadKind::capacitor;
        }
        if (ej.contains("switch")) {
            net.sw = parse_switch(ej.at("switch"), join(epath, "switch"), notes);
        } else {
            net.sw = defaults::pull_in_switch();
            note_default(notes, join(epath, "switch.pull_in_V"), defaults::pull_in_voltage);
        }
    } else {
        net = defaults::electrical_network();
        note_default(notes, join(path, "electrical"), "default crystal/switch/leak network");
    }
    unit.electrical = net;

    if (j.contains("actuator")) {
        unit.actuator = parse_actuator(j.at("actuator"), join(path, "actuator"), notes);
    }
    return unit;
}

} // namespace cfgdetail

/// Parse a configuration document into a validated, SI-unit ScenarioConfig.
/// Unknown keys are rejected; every applied default is echoed in the notes.
inline ParsedConfig parse_config(const ConfigDocument& doc) {
    using namespace cfgdetail;
    ParsedConfig out;
    auto& notes = out.notes;
    auto& cfg = out.config;

    require_object(doc, "");
    reject_unknown_keys(doc, "", {"fluid", "ambient_C", "sim", "units"});

    if (doc.contains("ambient_C")) {
        cfg.ambient_temp = celsius_to_kelvin(number_field(doc, "", "ambient_C"));
    } else {
        cfg.ambient_temp = defaults::cold_temp;
        note_default(notes, "ambient_C", kelvin_to_celsius(defaults::cold_temp));
    }

    if (doc.contains("fluid")) {
        const auto& fj = doc.at("fluid");
        require_object(fj, "fluid");
        reject_unknown_keys(fj, "fluid",
                            {"schedule", "heat_capacity_rate_W_per_K",
                             "transit_delay_per_unit_s"});
        if (fj.contains("schedule")) {
            cfg.fluid.schedule = parse_schedule(fj.at("schedule"), "fluid.schedule", notes);
        } else {
            cfg.fluid.schedule = defaults::fluid_chain().schedule;
            note_default(notes, "fluid.schedule", "square 30/90 C, 60 s period");
        }
        if (fj.contains("heat_capacity_rate_W_per_K")) {
            cfg.fluid.heat_capacity_rate = number_field(fj, "fluid", "heat_capacity_rate_W_per_K");
        } else {
            cfg.fluid.heat_capacity_rate = defaults::heat_capacity_rate;
            note_default(notes, "fluid.heat_capacity_rate_W_per_K",
                         defaults::heat_capacity_rate);
        }
        if (fj.contains("transit_delay_per_unit_s")) {
            cfg.fluid.transit_delay_per_unit = number_field(fj, "fluid", "transit_delay_per_unit_s");
        } else {
            cfg.fluid.transit_delay_per_unit = 0.0;
        }
    } else {
        cfg.fluid = defaults::fluid_chain();
        note_default(notes, "fluid", "square 30/90 C loop at 4.18 W/K");
    }

    if (doc.contains("sim")) {
        const auto& sj = doc.at("sim");
        require_object(sj, "sim");
        reject_unknown_keys(sj, "sim",
                            {"dt_s", "t_end_s", "event_tolerance_V", "accumulation_mode"});
        if (sj.contains("dt_s")) {
            cfg.dt = number_field(sj, "sim", "dt_s");
        } else {
            cfg.dt = defaults::dt;
            note_default(notes, "sim.dt_s", defaults::dt);
        }
        if (sj.contains("t_end_s")) {
            cfg.t_end = number_field(sj, "sim", "t_end_s");
        } else {
            cfg.t_end = defaults::t_end;
            note_default(notes, "sim.t_end_s", defaults::t_end);
        }
        if (sj.contains("event_tolerance_V")) {
            cfg.event_tolerance = number_field(sj, "sim", "event_tolerance_V");
        } else {
            cfg.event_tolerance = defaults::event_tolerance;
            note_default(notes, "sim.event_tolerance_V", defaults::event_tolerance);
        }
        if (sj.contains("accumulation_mode")) {
            const auto mode = cfgdetail::string_field(sj, "sim", "accumulation_mode");
            if (mode == "unipolar-gated") {
                cfg.accumulation_mode = AccumulationMode::unipolar_gated;
            } else if (mode == "bipolar") {
                cfg.accumulation_mode = AccumulationMode::bipolar;
            } else {
                fail("sim.accumulation_mode", "expected one of unipolar-gated, bipolar");
            }
        } else {
            cfg.accumulation_mode = AccumulationMode::unipolar_gated;
            note_default(notes, "sim.accumulation_mode", "unipolar-gated");
        }
    } else {
        cfg.dt = defaults::dt;
        cfg.t_end = defaults::t_end;
        cfg.event_tolerance = defaults::event_tolerance;
        cfg.accumulation_mode = AccumulationMode::unipolar_gated;
        note_default(notes, "sim.dt_s", defaults::dt);
        note_default(notes, "sim.t_end_s", defaults::t_end);
        note_default(notes, "sim.event_tolerance_V", defaults::event_tolerance);
        note_default(notes, "sim.accumulation_mode", "unipolar-gated");
    }
    if (!(cfg.dt > 0.0)) fail("sim.dt_s", "must be > 0");
    if (!(cfg.t_end > cfg.dt)) fail("sim.t_end_s", "must be > dt_s");
    if (!(cfg.event_tolerance > 0.0)) fail("sim.event_tolerance_V", "must be > 0");

    if (!doc.contains("units")) fail("units", "missing (need at least one unit)");
    const auto& uj = doc.at("units");
    if (!uj.is_array() || uj.empty()) fail("units", "expected a nonempty array");
    for (std::size_t i = 0; i < uj.size(); ++i) {
        const std::string upath = "units[" + std::to_string(i) + "]";
        std::size_t repeat = 1;
        if (uj[i].is_object() && uj[i].contains("repeat")) {
            const auto& rj = uj[i].at("repeat");
            if (!rj.is_number_unsigned() || rj.get<std::size_t>() < 1) {
                fail(upath + ".repeat", "expected a positive integer");
            }
            repeat = rj.get<std::size_t>();
        }
        const UnitConfig unit = cfgdetail::parse_unit(uj[i], upath, cfg.ambient_temp, notes);
        for (std::size_t r = 0; r < repeat; ++r) cfg.units.push_back(unit);
    }
    cfg.fluid.unit_count = cfg.units.size();

    validate(cfg); // full cross-field validation in SI units
    return out;
}

/// Load and parse a configuration file.
inline ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    ConfigDocument doc;
    try {
        doc = ConfigDocument::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError("malformed config " + path + ": " + e.what());
    }
    return parse_config(doc);
}

/// Serialize a ScenarioConfig back to the document form (canonical keys,
/// human units, all fields explicit).
inline ConfigDocument to_document(const ScenarioConfig& cfg) {
    ConfigDocument doc;
    ConfigDocument sched;
    switch (cfg.fluid.schedule.waveform) {
        case Waveform::square: sched["waveform"] = "square"; break;
        case Waveform::sine: sched["waveform"] = "sine"; break;
        case Waveform::constant: sched["waveform"] = "constant"; break;
    }
    sched["hot_C"] = kelvin_to_celsius(cfg.fluid.schedule.hot_temp);
    sched["cold_C"] = kelvin_to_celsius(cfg.fluid.schedule.cold_temp);
    sched["period_s"] = cfg.fluid.schedule.period;
    sched["phase_s"] = cfg.fluid.schedule.phase;
    doc["fluid"]["schedule"] = sched;
    doc["fluid"]["heat_capacity_rate_W_per_K"] = cfg.fluid.heat_capacity_rate;
    doc["fluid"]["transit_delay_per_unit_s"] = cfg.fluid.transit_delay_per_unit;
    doc["ambient_C"] = kelvin_to_celsius(cfg.ambient_temp);
    doc["sim"]["dt_s"] = cfg.dt;
    doc["sim"]["t_end_s"] = cfg.t_end;
    doc["sim"]["event_tolerance_V"] = cfg.event_tolerance;
    doc["sim"]["accumulation_mode"] =
        cfg.accumulation_mode == AccumulationMode::unipolar_gated ? "unipolar-gated" : "bipolar";

    doc["units"] = ConfigDocument::array();
    for (const auto& unit : cfg.units) {
        ConfigDocument u;
        ConfigDocument layers = ConfigDocument::array();
        for (const auto& layer : unit.thermal.layers) {
            layers.push_back({{"label", to_string(layer.label)},
                              {"R_K_per_W", layer.thermal_resistance},
                              {"C_J_per_K", layer.thermal_capacitance}});
        }
        u["thermal"]["layers"] = layers;
        if (std::isfinite(unit.thermal.ambient_loss_resistance)) {
            u["thermal"]["ambient_loss_R_K_per_W"] = unit.thermal.ambient_loss_resistance;
        } else {
            u["thermal"]["ambient_loss_R_K_per_W"] = "inf";
        }
        const auto& c = unit.electrical.crystal;
        u["electrical"]["crystal"] = {{"pyro_coeff_C_per_m2K", c.pyro_coeff},
                                      {"electrode_area_mm2", c.electrode_area * 1e6},
                                      {"thickness_mm", c.thickness * 1e3},
                                      {"rel_permittivity", c.rel_permittivity},
                                      {"self_capacitance_pF", c.self_capacitance * 1e12}};
        u["electrical"]["store_pF"] = unit.electrical.store_capacitance * 1e12;
        u["electrical"]["parasitic_pF"] = unit.electrical.parasitic_capacitance * 1e12;
        if (std::isfinite(unit.electrical.leak_resistance)) {
            u["electrical"]["leak_ohm"] = unit.electrical.leak_resistance;
        } else {
            u["electrical"]["leak_ohm"] = "inf";
        }
        u["electrical"]["load_kind"] =
            unit.electrical.load_kind == LoadKind::actuator ? "actuator" : "capacitor";
        ConfigDocument sw;
        if (unit.electrical.sw.pull_in_voltage) {
            sw["pull_in_V"] = *unit.electrical.sw.pull_in_voltage;
        }
        if (unit.electrical.sw.gap) sw["gap_um"] = *unit.electrical.sw.gap * 1e6;
        if (unit.electrical.sw.actuation_area) {
            sw["actuation_area_mm2"] = *unit.electrical.sw.actuation_area * 1e6;
        }
        if (unit.electrical.sw.spring_constant) {
            sw["spring_N_per_m"] = *unit.electrical.sw.spring_constant;
        }
        sw["release_V"] = unit.electrical.sw.release_voltage;
        sw["contact_ohm"] = unit.electrical.sw.contact_resistance;
        u["electrical"]["switch"] = sw;
        if (unit.actuator) {
            u["actuator"] = {{"capacitance_pF", unit.actuator->capacitance * 1e12},
                             {"quad_coeff_m_per_V2", unit.actuator->quad_coeff}};
        }
        doc["units"].push_back(u);
    }
    return doc;
}

} // namespace pyrosim
