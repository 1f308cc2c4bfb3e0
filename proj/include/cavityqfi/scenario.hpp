// scenario.hpp — Named figure presets, custom scenarios, and trajectory-table
// assembly with CSV/JSON/SVG emission

#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cavityqfi/dynamics.hpp"
#include "cavityqfi/io.hpp"
#include "cavityqfi/kernels.hpp"
#include "cavityqfi/params.hpp"
#include "cavityqfi/qfi.hpp"
#include "cavityqfi/svg.hpp"

namespace cavityqfi::scenario {

using dynamics::Family;
using dynamics::InitialStateSpec;
using qfi::Mode;

struct OutputFormats {
    bool csv{true};
    bool json{false};
    bool svg{false};
};

struct Scenario {
    std::string name{"custom"};
    PhysParams params{};
    InitialStateSpec state{};
    Mode mode{Mode::rederived};
    TimeGrid grid{};
    OutputFormats outputs{};

    void validate() const {
        params.validate();
        grid.validate();
        if (mode == Mode::paper_faithful && state.kind == Family::raw)
            throw std::invalid_argument(
                "Scenario: paper_faithful mode requires the dressed or standard family");
    }
};

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "fig1a", "fig1b", "fig1c", "fig1d", "fig1b-inset",
        "fig3a", "fig3b", "fig3c", "fig3d", "fig3b-inset",
    };
    return names;
}

/// Figure presets. All use theta = pi/2, phi = 0, omega0 = 50 gamma0, and
/// default to paper_faithful mode; lambda/Omega follow the figure captions
/// (lambda in {5, 0.05} gamma0 x Omega in {0.05, 3} gamma0, insets Omega = 20 gamma0).
/// fig1* evolve the dressed family, fig3* the standard family.
inline std::optional<Scenario> preset(const std::string& name) {
    struct Entry {
        const char* name;
        double lambda, omega;
        Family family;
        double t_max;
        std::size_t samples;
    };
    static const std::array<Entry, 10> entries = {{
        {"fig1a", 5.0, 0.05, Family::dressed, 10.0, 2001},
        {"fig1b", 5.0, 3.0, Family::dressed, 10.0, 2001},
        {"fig1c", 0.05, 0.05, Family::dressed, 10.0, 2001},
        {"fig1d", 0.05, 3.0, Family::dressed, 10.0, 2001},
        {"fig1b-inset", 5.0, 20.0, Family::dressed, 20.0, 4001},
        {"fig3a", 5.0, 0.05, Family::standard, 10.0, 2001},
        {"fig3b", 5.0, 3.0, Family::standard, 10.0, 2001},
        {"fig3c", 0.05, 0.05, Family::standard, 10.0, 2001},
        {"fig3d", 0.05, 3.0, Family::standard, 10.0, 2001},
        {"fig3b-inset", 5.0, 20.0, Family::standard, 20.0, 4001},
    }};
    for (const auto& e : entries) {
        if (name == e.name) {
            Scenario s;
            s.name = e.name;
            s.params = make_params(e.lambda, e.omega);
            s.state = e.family == Family::dressed
                          ? InitialStateSpec::dressed_family(std::numbers::pi / 2, 0.0)
                          : InitialStateSpec::standard_family(std::numbers::pi / 2, 0.0);
            s.mode = Mode::paper_faithful;
            s.grid = TimeGrid{e.t_max, e.samples};
            return s;
        }
    }
    return std::nullopt;
}

inline const std::vector<std::string>& table_columns() {
    static const std::vector<std::string> cols = {
        "gamma0_t", "F_closed", "F_sld",  "qfi_flow", "rho11",   "rho22",      "re_rho12",
        "im_rho12", "purity",   "I_minus", "I_plus",   "gamma_minus", "gamma_plus",
    };
    return cols;
}

namespace detail {

/// The physical state whose trajectory the rho columns report. In
/// paper_faithful mode the standard family means the cavity-carried
/// excitation; the dressed-family transcription has unphysical diagonals, so
/// its rho columns always come from the pipeline (QFI columns are identical
/// either way).
inline InitialStateSpec column_state(const InitialStateSpec& spec, Mode mode) {
    if (mode == Mode::paper_faithful && spec.kind == Family::standard)
        return InitialStateSpec::cavity_excitation(spec.theta, spec.phi);
    return spec;
}

} // namespace detail

/// One row per grid point with the columns of table_columns(). QFI columns are
/// NaN for raw-amplitude states (no canonical phi-dependence).
inline io::Table compute_table(const Scenario& sc) {
    sc.validate();
    const bool has_qfi = sc.state.kind != Family::raw;
    const InitialStateSpec traj_spec = detail::column_state(sc.state, sc.mode);
    const dynamics::DressedState r0 = dynamics::initial_dressed_state(traj_spec);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    io::Table table;
    table.columns = table_columns();
    table.rows.reserve(sc.grid.samples);

    for (std::size_t i = 0; i < sc.grid.samples; ++i) {
        const double t = sc.grid.time(i);
        const kernels::KernelIntegrals k = kernels::kernel_integrals(t, sc.params);
        const dynamics::QubitState q =
            dynamics::reduce_to_qubit(dynamics::evolve_dressed(r0, t, sc.params));

        double f_closed = nan, f_sld = nan, flow = nan;
        if (has_qfi) {
            const qfi::QfiSample s = qfi::qfi_sample(sc.state, sc.mode, t, sc.params);
            f_closed = s.f_closed;
            f_sld = s.f_sld;
            flow = s.flow;
        }

        table.rows.push_back({t, f_closed, f_sld, flow, q.rho(0, 0).real(), q.rho(1, 1).real(),
                              q.rho(0, 1).real(), q.rho(0, 1).imag(), q.purity(), k.i_minus,
                              k.i_plus, kernels::gamma_minus(t, sc.params),
                              kernels::gamma_plus(t, sc.params)});
    }
    return table;
}

inline nlohmann::ordered_json scenario_echo(const Scenario& sc) {
    nlohmann::ordered_json j;
    j["name"] = sc.name;
    j["gamma0"] = sc.params.gamma0;
    j["lambda"] = sc.params.lambda;
    j["omega"] = sc.params.omega_big;
    j["omega0"] = sc.params.omega0;
    switch (sc.state.kind) {
    case Family::dressed: j["family"] = "dressed"; break;
    case Family::standard: j["family"] = "standard"; break;
    case Family::raw: j["family"] = "raw"; break;
    }
    j["theta"] = sc.state.theta;
    j["phi"] = sc.state.phi;
    if (sc.state.kind == Family::raw) {
        nlohmann::ordered_json amps = nlohmann::ordered_json::array();
        for (const auto& a : sc.state.amplitudes)
            amps.push_back({a.real(), a.imag()});
        j["amplitudes"] = amps;
    }
    j["mode"] = sc.mode == Mode::paper_faithful ? "paper-faithful" : "rederived";
    j["t_max"] = sc.grid.t_max;
    j["samples"] = sc.grid.samples;
    return j;
}

/// JSON mirror of the CSV schema: a scenario echo block plus one object per row.
inline std::string to_json(const Scenario& sc, const io::Table& table) {
    nlohmann::ordered_json j;
    j["scenario"] = scenario_echo(sc);
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (std::isnan(row[i]))
                obj[table.columns[i]] = nullptr;
            else
                obj[table.columns[i]] = row[i];
        }
        samples.push_back(std::move(obj));
    }
    j["samples"] = std::move(samples);
    return j.dump(2) + "\n";
}

struct RunPaths {
    std::optional<std::filesystem::path> csv;
    std::optional<std::filesystem::path> json;
    std::optional<std::filesystem::path> svg;
};

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& content,
                       std::vector<std::filesystem::path>& written) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot open output file " + path.string());
    os << content;
    os.flush();
    if (!os)
        throw std::runtime_error("write failed for " + path.string());
    written.push_back(path);
}

} // namespace detail

/// Computes the table and writes <out_dir>/<name>.{csv,json,svg} for the
/// selected formats. On any failure every file written by this call is
/// removed before rethrowing, so no partial outputs survive.
inline RunPaths run_scenario(const Scenario& sc, const std::filesystem::path& out_dir) {
    sc.validate();
    std::filesystem::create_directories(out_dir);

    const io::Table table = compute_table(sc);
    std::vector<std::filesystem::path> written;
    RunPaths paths;
    try {
        if (sc.outputs.csv) {
            std::ostringstream os;
            io::write_csv(os, table);
            const auto p = out_dir / (sc.name + ".csv");
            detail::write_file(p, os.str(), written);
            paths.csv = p;
        }
        if (sc.outputs.json) {
            const auto p = out_dir / (sc.name + ".json");
            detail::write_file(p, to_json(sc, table), written);
            paths.json = p;
        }
        if (sc.outputs.svg) {
            const auto p = out_dir / (sc.name + ".svg");
            detail::write_file(p, svg::render_svg(table, {"F_closed", "F_sld", "qfi_flow"}),
                               written);
            paths.svg = p;
        }
    } catch (...) {
        std::error_code ec;
        for (const auto& p : written)
            std::filesystem::remove(p, ec);
        throw;
    }
    return paths;
}

} // namespace cavityqfi::scenario
