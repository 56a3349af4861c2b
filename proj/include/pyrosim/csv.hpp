#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pyrosim/engine.hpp"
#include "pyrosim/errors.hpp"
#include "pyrosim/fitting.hpp"
#include "pyrosim/units.hpp"

namespace pyrosim {

/// Floats are printed with 9 significant digits so repeated runs of the same
/// inputs emit byte-identical files.
inline std::string format_csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

/// trace.csv schema: `time_s,inlet_C` then per unit i:
/// `u{i}_fluid_C,u{i}_crystal_C,u{i}_Vpyro_V,u{i}_switch,u{i}_Vload_V,u{i}_E_uJ,u{i}_x_um`.
/// Temperatures in Celsius, energy in microjoules, displacement in
/// micrometres, switch encoded 0/1.
inline void write_trace_csv(std::ostream& out, const Trace& trace) {
    const std::size_t n_units = trace.rows.empty() ? 0 : trace.rows.front().units.size();
    out << "time_s,inlet_C";
    for (std::size_t i = 0; i < n_units; ++i) {
        out << ",u" << i << "_fluid_C,u" << i << "_crystal_C,u" << i << "_Vpyro_V,u" << i
            << "_switch,u" << i << "_Vload_V,u" << i << "_E_uJ,u" << i << "_x_um";
    }
    out << "\n";
    for (const auto& row : trace.rows) {
        out << format_csv_double(row.time) << ','
            << format_csv_double(kelvin_to_celsius(row.inlet_temp));
        for (const auto& u : row.units) {
            out << ',' << format_csv_double(kelvin_to_celsius(u.fluid_temp)) << ','
                << format_csv_double(kelvin_to_celsius(u.crystal_temp)) << ','
                << format_csv_double(u.pyro_voltage) << ',' << (u.switch_closed ? 1 : 0) << ','
                << format_csv_double(u.load_voltage) << ','
                << format_csv_double(u.load_energy * 1e6) << ','
                << format_csv_double(u.displacement * 1e6);
        }
        out << "\n";
    }
}

/// sweep.csv schema: `param_value,v_max_V,e_max_uJ`.
inline void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
    out << "param_value,v_max_V,e_max_uJ\n";
    for (const auto& p : points) {
        out << format_csv_double(p.value) << ',' << format_csv_double(p.max_load_voltage) << ','
            << format_csv_double(p.max_stored_energy * 1e6) << "\n";
    }
}

/// fit.csv: one header row of parameter names (plus residual_rms, r_squared)
/// and one row of values.
inline void write_fit_csv(std::ostream& out, const FitResult& fit) {
    bool first = true;
    for (const auto& [name, value] : fit.params) {
        (void)value;
        out << (first ? "" : ",") << name;
        first = false;
    }
    out << (first ? "" : ",") << "residual_rms,r_squared\n";
    first = true;
    for (const auto& [name, value] : fit.params) {
        (void)name;
        out << (first ? "" : ",") << format_csv_double(value);
        first = false;
    }
    out << (first ? "" : ",") << format_csv_double(fit.residual_rms) << ','
        << format_csv_double(fit.r_squared) << "\n";
}

/// Read a two-column dataset CSV. A header row naming the columns is
/// required; the labels are carried into the DataSet.
inline DataSet read_xy_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open data file: " + path);
    }
    DataSet data;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream row(line);
        std::string first, second, extra;
        if (!std::getline(row, first, ',') || !std::getline(row, second, ',')) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected two columns");
        }
        if (std::getline(row, extra, ',')) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected two columns");
        }
        if (line_no == 1) {
            char* end = nullptr;
            std::strtod(first.c_str(), &end);
            if (end == first.c_str() + first.size() && !first.empty()) {
                throw ConfigError(path + ": first row must be a header naming the columns");
            }
            data.x_label = first;
            data.y_label = second;
            continue;
        }
        try {
            std::size_t used = 0;
            const double x = std::stod(first, &used);
            if (used != first.size()) throw std::invalid_argument(first);
            const double y = std::stod(second, &used);
            if (used != second.size()) throw std::invalid_argument(second);
            data.x.push_back(x);
            data.y.push_back(y);
        } catch (const std::exception&) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": malformed number");
        }
    }
    if (data.x_label.empty() && data.x.empty()) {
        throw ConfigError(path + ": empty data file");
    }
    return data;
}

} // namespace pyrosim
