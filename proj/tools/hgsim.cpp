// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors
//
// hgsim: command line front end over the hgmimo library.
//
//   hgsim simulate      --preset table1 --out results/
//   hgsim steer-sweep   --config my.cfg --tilts "0,0;15,0;30,0"
//   hgsim profile       --plane rx --extent-w 3 --points 161
//   hgsim optimize      --preset table1
//   hgsim capture-sweep --sizes "0.5,1.0,1.5,2.2"
//
// Exit codes: 0 success, 2 bad usage or config, 3 invalid parameter
// values, 4 IO or internal failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgmimo/hgmimo.hpp"

namespace
{

struct CommonOpts
{
    std::string config_path;
    std::string preset = "table1";
    std::string out_dir;
    std::string scheme;
    std::string pol;
    std::vector<double> tilt;
};

void add_common(CLI::App *cmd, CommonOpts &opts)
{
    auto *config = cmd->add_option("--config", opts.config_path, "Scenario config file (key = value lines)")
                       ->check(CLI::ExistingFile);
    cmd->add_option("--preset", opts.preset, "Built-in scenario when no config is given")
        ->check(CLI::IsMember({"table1", "desk"}))
        ->excludes(config);
    cmd->add_option("--out", opts.out_dir, "Directory for result files (default: print to stdout)");
    cmd->add_option("--scheme", opts.scheme, "Override run.scheme")
        ->check(CLI::IsMember({"hg", "svd", "both"}));
    cmd->add_option("--pol", opts.pol, "Override run.polarization")
        ->check(CLI::IsMember({"uni", "cross"}));
    cmd->add_option("--tilt", opts.tilt, "Override panel tilt as two angles in degrees")
        ->expected(2)
        ->delimiter(',');
}

hgmimo::ScenarioConfig load_scenario(const CommonOpts &opts)
{
    hgmimo::ScenarioConfig cfg;
    if (!opts.config_path.empty())
        cfg = hgmimo::scenario_from_map(hgmimo::parse_config_file(opts.config_path));
    else if (opts.preset == "desk")
        cfg = hgmimo::desk_preset();
    else
        cfg = hgmimo::table1_preset();

    if (!opts.scheme.empty())
        cfg.scheme = hgmimo::detail::parse_scheme(opts.scheme);
    if (!opts.pol.empty())
        cfg.polarization = hgmimo::detail::parse_polarization(opts.pol);
    if (opts.tilt.size() == 2)
    {
        cfg.tilt_x_deg = opts.tilt[0];
        cfg.tilt_y_deg = opts.tilt[1];
    }
    hgmimo::validate(cfg);
    return cfg;
}

// Emits to --out when given, otherwise to stdout with a file banner.
void deliver(const std::string &out_dir, const std::string &name, const std::string &text)
{
    if (out_dir.empty())
    {
        std::cout << "--- " << name << " ---\n" << text;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path path = fs::path(out_dir) / name;
    hgmimo::ensure_dir(path.parent_path());
    hgmimo::write_text_file(path, text);
    std::cout << "wrote " << path.string() << "\n";
}

std::vector<std::pair<double, double>> parse_tilt_list(const std::string &text)
{
    std::vector<std::pair<double, double>> tilts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
    {
        const auto comma = item.find(',');
        if (comma == std::string::npos)
            throw hgmimo::ConfigError("--tilts entry '" + item + "' is not 'x,y'");
        tilts.emplace_back(hgmimo::parse_double("--tilts", item.substr(0, comma)),
                           hgmimo::parse_double("--tilts", item.substr(comma + 1)));
    }
    if (tilts.empty())
        throw hgmimo::ConfigError("--tilts produced no angles");
    return tilts;
}

int run_simulate(const CommonOpts &opts)
{
    const hgmimo::ScenarioConfig cfg = load_scenario(opts);
    const hgmimo::SimulationResult result = hgmimo::simulate(cfg);
    deliver(opts.out_dir, "summary.txt",
            hgmimo::summary_text("simulate", cfg, result.reports, result.noise_dbm));
    deliver(opts.out_dir, "streams.csv", hgmimo::streams_csv(result.reports));
    return 0;
}

int run_steer_sweep(const CommonOpts &opts, const std::string &tilts_arg)
{
    hgmimo::ScenarioConfig cfg = load_scenario(opts);
    std::vector<std::pair<double, double>> tilts = {{0, 0}, {15, 0}, {30, 0}, {30, 30}, {45, 0}};
    if (!tilts_arg.empty())
        tilts = parse_tilt_list(tilts_arg);

    const std::vector<hgmimo::SweepRow> rows = hgmimo::steer_sweep(cfg, tilts);
    deliver(opts.out_dir, "sweep.csv", hgmimo::sweep_csv(rows));
    return 0;
}

int run_profile(const CommonOpts &opts, const std::string &plane, double extent_w, int points)
{
    const hgmimo::ScenarioConfig cfg = load_scenario(opts);
    const hgmimo::ScenarioParts parts = hgmimo::build_scenario(cfg);

    // equal power across the configured mode set, looked at one panel plane
    const arma::vec power =
        hgmimo::equal_power_w(hgmimo::dbm_to_watt(cfg.tx_power_dbm), parts.modes.size());
    const double plane_z = (plane == "tx") ? -cfg.distance_m / 2.0 : cfg.distance_m / 2.0;
    const hgmimo::Tilt tilt = (plane == "tx")
                                  ? hgmimo::Tilt{hgmimo::deg_to_rad(cfg.tilt_x_deg),
                                                 hgmimo::deg_to_rad(cfg.tilt_y_deg)}
                                  : hgmimo::Tilt{};

    for (const hgmimo::Mode &mode : parts.modes)
    {
        const hgmimo::FieldGrid grid = hgmimo::power_profile(
            parts.beam, {mode}, arma::vec{power(0)}, plane_z, tilt, extent_w, points);
        char name[64];
        std::snprintf(name, sizeof name, "grids/%s_l%d_m%d.grid", plane.c_str(), mode.l, mode.m);
        deliver(opts.out_dir, name, hgmimo::grid_text(grid));
    }

    const hgmimo::FieldGrid total = hgmimo::power_profile(parts.beam, parts.modes, power, plane_z,
                                                          tilt, extent_w, points);
    deliver(opts.out_dir, "grids/" + plane + "_total.grid", hgmimo::grid_text(total));
    return 0;
}

int run_optimize(const CommonOpts &opts)
{
    const hgmimo::ScenarioConfig cfg = load_scenario(opts);
    const double w0 = hgmimo::optimize_waist(hgmimo::wavelength_m(cfg), cfg.distance_m);
    const hgmimo::GaussianBeam beam(w0, hgmimo::wavelength_m(cfg));

    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "optimal_waist_m = %.17g\n", w0);
    out << line;
    std::snprintf(line, sizeof line, "edge_radius_m = %.17g\n",
                  hgmimo::beam_radius(beam, cfg.distance_m / 2.0));
    out << line;
    std::snprintf(line, sizeof line, "rayleigh_range_m = %.17g\n", beam.rayleigh_range());
    out << line;
    deliver(opts.out_dir, "optimize.txt", out.str());
    return 0;
}

int run_capture_sweep(const CommonOpts &opts, const std::string &sizes_arg)
{
    const hgmimo::ScenarioConfig cfg = load_scenario(opts);
    std::vector<double> sizes;
    std::stringstream ss(sizes_arg);
    std::string item;
    while (std::getline(ss, item, ','))
        sizes.push_back(hgmimo::parse_double("--sizes", item));

    const std::vector<hgmimo::Mode> modes = hgmimo::mode_grid(cfg.l_max, cfg.m_max);
    const std::vector<hgmimo::CaptureRow> rows = hgmimo::capture_sweep(modes, sizes);
    deliver(opts.out_dir, "sweep.csv", hgmimo::capture_csv(rows));
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"near-field line-of-sight MIMO over Hermite-Gaussian beam modes"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CommonOpts opts;

    CLI::App *simulate = app.add_subcommand("simulate", "Run one scenario and report per-stream SINR and rate");
    add_common(simulate, opts);

    CLI::App *sweep = app.add_subcommand("steer-sweep", "Evaluate a ladder of panel tilts");
    add_common(sweep, opts);
    std::string tilts_arg;
    sweep->add_option("--tilts", tilts_arg, "Semicolon list of tilt pairs, e.g. \"0,0;15,0;30,30\"");

    CLI::App *profile = app.add_subcommand("profile", "Dump transverse power grids per mode");
    add_common(profile, opts);
    std::string plane = "rx";
    double extent_w = 3.0;
    int points = 161;
    profile->add_option("--plane", plane, "Panel plane to sample")->check(CLI::IsMember({"tx", "rx"}));
    profile->add_option("--extent-w", extent_w, "Half extent in local beam radii")
        ->check(CLI::PositiveNumber);
    profile->add_option("--points", points, "Samples per axis")->check(CLI::Range(2, 4096));

    CLI::App *optimize = app.add_subcommand("optimize", "Report the rate-optimal beam waist for the link");
    add_common(optimize, opts);

    CLI::App *capture = app.add_subcommand("capture-sweep", "Tabulate capture efficiency vs aperture size");
    add_common(capture, opts);
    std::string sizes_arg = "0.5,1.0,1.5,2.2";
    capture->add_option("--sizes", sizes_arg, "Comma list of half sides in units of the beam radius");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &err)
    {
        // normalize every usage failure to exit code 2; --help stays 0
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (simulate->parsed())
            return run_simulate(opts);
        if (sweep->parsed())
            return run_steer_sweep(opts, tilts_arg);
        if (profile->parsed())
            return run_profile(opts, plane, extent_w, points);
        if (optimize->parsed())
            return run_optimize(opts);
        return run_capture_sweep(opts, sizes_arg);
    }
    catch (const hgmimo::ConfigError &err)
    {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument &err)
    {
        std::cerr << "invalid parameter: " << err.what() << "\n";
        return 3;
    }
    catch (const std::domain_error &err)
    {
        std::cerr << "invalid parameter: " << err.what() << "\n";
        return 3;
    }
    catch (const hgmimo::IoError &err)
    {
        std::cerr << "io error: " << err.what() << "\n";
        return 4;
    }
    catch (const std::exception &err)
    {
        std::cerr << "error: " << err.what() << "\n";
        return 4;
    }
}
