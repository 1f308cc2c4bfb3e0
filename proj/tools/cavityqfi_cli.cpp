// cavityqfi_cli.cpp — Command-line front end: figure presets, custom scenarios,
// CSV/JSON/SVG trajectory emission, and the cross-validation suite
//
// Exit codes: 0 success, 1 validation failure, 2 bad arguments.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cavityqfi/cavityqfi.hpp"

namespace {

using namespace cavityqfi;

std::filesystem::path default_out_dir() {
    if (const char* env = std::getenv("QFI_OUT_DIR"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    return std::filesystem::current_path();
}

scenario::OutputFormats parse_formats(const std::string& list) {
    scenario::OutputFormats f{false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "csv")
            f.csv = true;
        else if (item == "json")
            f.json = true;
        else if (item == "svg")
            f.svg = true;
        else
            throw CLI::ValidationError("--format", "unknown format '" + item + "'");
    }
    if (!f.csv && !f.json && !f.svg)
        throw CLI::ValidationError("--format", "no output format selected");
    return f;
}

std::array<Complex, 3> parse_amplitudes(const std::vector<double>& v) {
    if (v.size() != 6)
        throw CLI::ValidationError("--amplitudes",
                                   "expected 6 numbers: re1,im1,re2,im2,re3,im3");
    return {Complex{v[0], v[1]}, Complex{v[2], v[3]}, Complex{v[4], v[5]}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qubit-in-dissipative-cavity QFI simulator"};
    app.require_subcommand(1);

    // ---- run ----
    auto* run = app.add_subcommand("run", "Compute a trajectory and write data files");
    std::string preset_name, family = "dressed", mode_name, format_list = "csv";
    std::string out_dir = default_out_dir().string();
    double lambda = 5.0, omega = 0.05, omega0 = 50.0, theta = std::numbers::pi / 2, phi = 0.0;
    double t_max = -1.0;
    long long samples = -1;
    std::vector<double> amp_values;

    run->add_option("--preset", preset_name,
                    "Preset name (fig1a/b/c/d, fig3a/b/c/d, fig1b-inset, fig3b-inset)");
    auto* opt_lambda = run->add_option("--lambda", lambda, "Spectral width in units of gamma0");
    auto* opt_omega = run->add_option("--omega", omega, "Atom-cavity coupling in units of gamma0");
    auto* opt_omega0 = run->add_option("--omega0", omega0, "Bohr frequency in units of gamma0");
    auto* opt_theta = run->add_option("--theta", theta, "State angle theta");
    auto* opt_phi = run->add_option("--phi", phi, "State phase phi");
    auto* opt_family =
        run->add_option("--family", family, "Initial-state family: dressed|standard|raw");
    auto* opt_amps = run->add_option("--amplitudes", amp_values,
                                     "Raw dressed-basis amplitudes re1,im1,re2,im2,re3,im3")
                         ->delimiter(',');
    auto* opt_mode = run->add_option("--mode", mode_name, "rederived|paper-faithful");
    auto* opt_tmax = run->add_option("--t-max", t_max, "Horizon in units of 1/gamma0");
    auto* opt_samples = run->add_option("--samples", samples, "Number of grid points (>= 2)");
    run->add_option("--out", out_dir, "Output directory (default: $QFI_OUT_DIR or cwd)");
    run->add_option("--format", format_list, "Comma-separated outputs: csv,json,svg");

    // ---- validate ----
    auto* validate_cmd = app.add_subcommand("validate", "Run the cross-validation suite");
    std::string level_name = "quick";
    validate_cmd->add_option("--level", level_name, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*run) {
            scenario::Scenario sc;
            if (!preset_name.empty()) {
                auto p = scenario::preset(preset_name);
                if (!p) {
                    std::cerr << "error: unknown preset '" << preset_name << "'\n";
                    return 2;
                }
                sc = *p;
            } else {
                sc.name = "custom";
                sc.mode = qfi::Mode::rederived; // presets default to paper-faithful, custom runs do not
            }

            // explicit flags override preset fields
            if (*opt_lambda)
                sc.params.lambda = lambda;
            if (*opt_omega)
                sc.params.omega_big = omega;
            if (*opt_omega0)
                sc.params.omega0 = omega0;
            if (*opt_theta)
                sc.state.theta = theta;
            if (*opt_phi)
                sc.state.phi = phi;
            if (*opt_family) {
                if (family == "dressed")
                    sc.state = dynamics::InitialStateSpec::dressed_family(sc.state.theta,
                                                                          sc.state.phi);
                else if (family == "standard")
                    sc.state = dynamics::InitialStateSpec::standard_family(sc.state.theta,
                                                                           sc.state.phi);
                else if (family == "raw")
                    sc.state = dynamics::InitialStateSpec::raw_amplitudes(
                        parse_amplitudes(amp_values));
                else {
                    std::cerr << "error: unknown family '" << family << "'\n";
                    return 2;
                }
            } else if (*opt_amps) {
                std::cerr << "error: --amplitudes requires --family raw\n";
                return 2;
            }
            if (*opt_mode) {
                if (mode_name == "rederived")
                    sc.mode = qfi::Mode::rederived;
                else if (mode_name == "paper-faithful")
                    sc.mode = qfi::Mode::paper_faithful;
                else {
                    std::cerr << "error: unknown mode '" << mode_name << "'\n";
                    return 2;
                }
            }
            if (*opt_tmax)
                sc.grid.t_max = t_max;
            if (*opt_samples) {
                if (samples < 2) {
                    std::cerr << "error: --samples must be >= 2\n";
                    return 2;
                }
                sc.grid.samples = static_cast<std::size_t>(samples);
            }
            sc.outputs = parse_formats(format_list);

            try {
                sc.validate();
            } catch (const std::exception& e) {
                std::cerr << "error: invalid scenario: " << e.what() << "\n";
                return 2;
            }

            const auto paths = scenario::run_scenario(sc, out_dir);
            if (paths.csv)
                std::cout << paths.csv->string() << '\n';
            if (paths.json)
                std::cout << paths.json->string() << '\n';
            if (paths.svg)
                std::cout << paths.svg->string() << '\n';
            return 0;
        }

        if (*validate_cmd) {
            const auto level =
                level_name == "full" ? validation::Level::full : validation::Level::quick;
            const auto results = validation::run_checks(level);
            return validation::print_report(std::cout, results);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
