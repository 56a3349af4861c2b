// pyrosim command line front end.
//
//   pyrosim run       --config scenario.json --out results/
//   pyrosim sweep     --config scenario.json --param units.0.electrical.store_pF
//                     --values 2,10,47 --out results/
//   pyrosim calibrate --mode {linear|exp|rleak|actuator} ...
//
// `run` writes trace.csv and summary.txt, `sweep` writes sweep.csv,
// `calibrate` prints key=value fit parameters and writes fit.csv.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pyrosim/pyrosim.hpp"

namespace fs = std::filesystem;

namespace {

void print_notes(const pyrosim::ParsedConfig& parsed) {
    for (const auto& note : parsed.notes) std::cerr << note << "\n";
}

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw pyrosim::ConfigError("--values: malformed number '" + item + "'");
        }
    }
    if (values.empty()) throw pyrosim::ConfigError("--values: empty list");
    return values;
}

/// Navigate a dotted path ("units.0.electrical.store_pF") through the config
/// document and overwrite the addressed numeric field.
void set_document_value(pyrosim::ConfigDocument& doc, const std::string& path, double value) {
    pyrosim::ConfigDocument* node = &doc;
    std::size_t start = 0;
    while (true) {
        const auto dot = path.find('.', start);
        const std::string token =
            path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        const bool last = dot == std::string::npos;
        if (node->is_array()) {
            std::size_t index = 0;
            try {
                index = std::stoul(token);
            } catch (const std::exception&) {
                throw pyrosim::ConfigError("--param: expected array index at '" + token +
                                           "' in " + path);
            }
            if (index >= node->size()) {
                throw pyrosim::ConfigError("--param: index out of range at '" + token + "' in " +
                                           path);
            }
            node = &(*node)[index];
        } else if (node->is_object()) {
            if (!node->contains(token)) {
                throw pyrosim::ConfigError("--param: no field '" + token + "' in " + path +
                                           " (add it to the config to sweep it)");
            }
            node = &(*node)[token];
        } else {
            throw pyrosim::ConfigError("--param: cannot descend into '" + token + "' in " + path);
        }
        if (last) break;
        start = dot + 1;
    }
    if (!node->is_number()) {
        throw pyrosim::ConfigError("--param: field addressed by '" + path + "' is not numeric");
    }
    *node = value;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pyrosim::ConfigError("cannot write " + path.string());
    out << contents;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    const auto parsed = pyrosim::parse_config_file(config_path);
    print_notes(parsed);
    const auto trace = pyrosim::run_scenario(parsed.config);
    const auto summary = pyrosim::summarize(trace);

    fs::create_directories(out_dir);
    std::ostringstream trace_csv;
    pyrosim::write_trace_csv(trace_csv, trace);
    write_file(fs::path(out_dir) / "trace.csv", trace_csv.str());

    std::ostringstream txt;
    txt << "max load voltage (V): " << pyrosim::format_csv_double(summary.max_load_voltage)
        << "\n"
        << "max stored energy (uJ): "
        << pyrosim::format_csv_double(summary.max_stored_energy * 1e6) << "\n";
    bool any_actuator = false;
    for (const auto& unit : parsed.config.units) any_actuator |= unit.actuator.has_value();
    if (any_actuator) {
        txt << "max displacement (um): "
            << pyrosim::format_csv_double(summary.max_displacement * 1e6) << "\n";
    }
    txt << "switch events: " << trace.events.size() << "\n";
    write_file(fs::path(out_dir) / "summary.txt", txt.str());
    std::cout << txt.str();
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& param,
              const std::string& values_text, const std::string& out_dir) {
    const auto values = parse_value_list(values_text);

    std::ifstream in(config_path);
    if (!in) throw pyrosim::ConfigError("cannot open config file: " + config_path);
    pyrosim::ConfigDocument doc;
    try {
        doc = pyrosim::ConfigDocument::parse(in);
    } catch (const std::exception& e) {
        throw pyrosim::ConfigError("malformed config " + config_path + ": " + e.what());
    }

    std::vector<pyrosim::ScenarioConfig> configs;
    configs.reserve(values.size());
    for (double v : values) {
        pyrosim::ConfigDocument variant = doc;
        set_document_value(variant, param, v);
        configs.push_back(pyrosim::parse_config(variant).config);
    }
    const auto points = pyrosim::run_sweep(configs, values);

    fs::create_directories(out_dir);
    std::ostringstream csv;
    pyrosim::write_sweep_csv(csv, points);
    write_file(fs::path(out_dir) / "sweep.csv", csv.str());
    std::cout << csv.str();
    return 0;
}

void emit_fit(const pyrosim::FitResult& fit, const std::string& out_dir) {
    for (const auto& [name, value] : fit.params) {
        std::cout << name << "=" << pyrosim::format_csv_double(value) << "\n";
    }
    std::cout << "residual_rms=" << pyrosim::format_csv_double(fit.residual_rms) << "\n";
    std::cout << "r_squared=" << pyrosim::format_csv_double(fit.r_squared) << "\n";
    fs::create_directories(out_dir);
    std::ostringstream csv;
    pyrosim::write_fit_csv(csv, fit);
    write_file(fs::path(out_dir) / "fit.csv", csv.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lumped-element simulator for fluid-heated pyroelectric "
                 "high-voltage generator chains"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", param, values_text, mode, data_path;
    double vmax = 0.0, dtdt = 0.0, displacement_um = 0.0, voltage_v = 0.0;

    auto* run = app.add_subcommand("run", "Simulate one scenario and write trace.csv");
    run->add_option("--config", config_path, "Scenario config (JSON)")->required();
    run->add_option("--out", out_dir, "Output directory");

    auto* sweep = app.add_subcommand("sweep", "Run a scenario once per parameter value");
    sweep->add_option("--config", config_path, "Scenario config (JSON)")->required();
    sweep->add_option("--param", param, "Dotted config path, e.g. units.0.electrical.store_pF")
        ->required();
    sweep->add_option("--values", values_text, "Comma-separated values")->required();
    sweep->add_option("--out", out_dir, "Output directory");

    auto* cal = app.add_subcommand("calibrate", "Fit model parameters to measured data");
    cal->add_option("--mode", mode, "linear | exp | rleak | actuator")->required();
    cal->add_option("--data", data_path, "x,y CSV with a header row (linear/exp)");
    cal->add_option("--config", config_path, "Scenario config naming the crystal (rleak)");
    cal->add_option("--vmax", vmax, "Measured saturation voltage, V (rleak)");
    cal->add_option("--dtdt", dtdt, "Peak crystal heating rate, K/s (rleak)");
    cal->add_option("--displacement-um", displacement_um, "Measured stroke, um (actuator)");
    cal->add_option("--voltage-v", voltage_v, "Voltage at that stroke, V (actuator)");
    cal->add_option("--out", out_dir, "Output directory for fit.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run)) {
            return cmd_run(config_path, out_dir);
        }
        if (app.got_subcommand(sweep)) {
            return cmd_sweep(config_path, param, values_text, out_dir);
        }
        // calibrate
        if (mode == "linear" || mode == "exp") {
            if (data_path.empty()) throw pyrosim::ConfigError("calibrate: --data is required");
            const auto data = pyrosim::read_xy_csv(data_path);
            const auto fit = mode == "linear" ? pyrosim::fit_linear(data)
                                              : pyrosim::fit_saturating_exponential(data);
            emit_fit(fit, out_dir);
            return 0;
        }
        if (mode == "rleak") {
            if (!(dtdt > 0.0)) throw pyrosim::ConfigError("calibrate rleak: needs --dtdt > 0");
            pyrosim::CrystalSpec crystal = pyrosim::defaults::crystal();
            if (!config_path.empty()) {
                const auto parsed = pyrosim::parse_config_file(config_path);
                print_notes(parsed);
                crystal = parsed.config.units.front().electrical.crystal;
            } else {
                std::cerr << "using default crystal (no --config given)\n";
            }
            const double r = pyrosim::infer_leak_resistance(vmax, crystal, dtdt);
            pyrosim::FitResult fit;
            fit.params = {{"R_leak_ohm", r}};
            emit_fit(fit, out_dir);
            return 0;
        }
        if (mode == "actuator") {
            const double k =
                pyrosim::calibrate_actuator(displacement_um * 1e-6, voltage_v);
            pyrosim::FitResult fit;
            fit.params = {{"quad_coeff_m_per_V2", k}};
            emit_fit(fit, out_dir);
            return 0;
        }
        throw pyrosim::ConfigError("calibrate: unknown --mode '" + mode +
                                   "' (expected linear, exp, rleak, actuator)");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
