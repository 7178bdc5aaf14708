// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_IO_HPP
#define HGMIMO_IO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgmimo/linkmetrics.hpp"
#include "hgmimo/scenario.hpp"

namespace hgmimo {

// Filesystem-level failures (distinct from config and domain errors so the
// CLI can map them to their own exit code).
struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

namespace detail {

// %.10g everywhere in CSV output: compact, deterministic, and more precision
// than any downstream consumer of these tables needs.
inline std::string g10(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// %.17g for values that must survive a text round trip.
inline std::string g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

inline void ensure_dir(const std::filesystem::path &dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

inline void write_text_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary); // binary keeps bytes identical across platforms
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

// ------------------------------------------------------------- CSV text ----

inline std::string streams_csv(const std::vector<LinkReport> &reports)
{
    std::string out = "scheme,polarization,stream,l,m,sinr_db,se_bps_hz\n";
    for (const LinkReport &report : reports)
        for (arma::uword k = 0; k < report.sinr_db.n_elem; ++k)
        {
            out += report.scheme + "," + report.polarization + "," + std::to_string(k) + "," +
                   std::to_string(report.modes[k].l) + "," + std::to_string(report.modes[k].m) + "," +
                   detail::g10(report.sinr_db(k)) + "," + detail::g10(report.se_bps_per_hz(k)) + "\n";
        }
    return out;
}

inline std::string sweep_csv(const std::vector<SweepRow> &rows)
{
    std::string out =
        "tilt_x_deg,tilt_y_deg,scheme,polarization,n_streams,total_se_bps_hz,throughput_bps,"
        "min_sinr_db,max_sinr_db\n";
    for (const SweepRow &row : rows)
        out += detail::g10(row.tilt_x_deg) + "," + detail::g10(row.tilt_y_deg) + "," + row.scheme +
               "," + row.polarization + "," + std::to_string(row.n_streams) + "," +
               detail::g10(row.total_se) + "," + detail::g10(row.throughput_bps) + "," +
               detail::g10(row.min_sinr_db) + "," + detail::g10(row.max_sinr_db) + "\n";
    return out;
}

inline std::string capture_csv(const std::vector<CaptureRow> &rows)
{
    std::string out = "l,m,s_over_w,efficiency\n";
    for (const CaptureRow &row : rows)
        out += std::to_string(row.mode.l) + "," + std::to_string(row.mode.m) + "," +
               detail::g10(row.s_over_w) + "," + detail::g10(row.efficiency) + "\n";
    return out;
}

// ------------------------------------------------------------ grid text ----

// Self-describing text grid: '#' header lines, then nx rows of ny values.
inline std::string grid_text(const FieldGrid &grid)
{
    std::string out;
    out += "# hgmimo field grid\n";
    out += "# nx " + std::to_string(grid.nx) + " ny " + std::to_string(grid.ny) + "\n";
    out += "# x0 " + detail::g17(grid.x0) + " y0 " + detail::g17(grid.y0) + " dx " +
           detail::g17(grid.dx) + " dy " + detail::g17(grid.dy) + "\n";
    out += std::string("# axes ") + (grid.axes_in_waists ? "units_of_w" : "meters") + "\n";
    for (int ix = 0; ix < grid.nx; ++ix)
    {
        for (int iy = 0; iy < grid.ny; ++iy)
        {
            if (iy)
                out += ' ';
            out += detail::g17(grid.at(ix, iy));
        }
        out += '\n';
    }
    return out;
}

// -------------------------------------------------------------- summary ----

inline std::string report_summary(const LinkReport &report)
{
    std::string out;
    out += "[report scheme=" + report.scheme + " polarization=" + report.polarization + "]\n";
    out += "streams = " + std::to_string(report.sinr_db.n_elem) + "\n";
    out += "total_se_bps_hz = " + detail::g10(report.total_se) + "\n";
    out += "throughput_bps = " + detail::g10(report.throughput_bps) + "\n";
    out += "min_sinr_db = " + detail::g10(report.sinr_db.min()) + "\n";
    out += "max_sinr_db = " + detail::g10(report.sinr_db.max()) + "\n";
    return out;
}

// Human-readable run summary: command, derived quantities, the full effective
// config echo, and one block per link report.
inline std::string summary_text(const std::string &command, const ScenarioConfig &cfg,
                                const std::vector<LinkReport> &reports, double noise_dbm)
{
    const GaussianBeam beam = scenario_beam(cfg);
    std::string out;
    out += "hgsim " + command + "\n";
    out += "\n";
    out += "waist_m = " + detail::g10(beam.waist) + "\n";
    out += "edge_radius_m = " + detail::g10(beam_radius(beam, 0.5 * cfg.distance_m)) + "\n";
    out += "rayleigh_range_m = " + detail::g10(beam.rayleigh_range()) + "\n";
    out += "noise_power_dbm = " + detail::g10(noise_dbm) + "\n";
    out += "\n[config]\n";
    out += format_config(scenario_to_map(cfg));
    for (const LinkReport &report : reports)
    {
        out += "\n";
        out += report_summary(report);
    }
    return out;
}

} // namespace hgmimo

#endif // HGMIMO_IO_HPP
