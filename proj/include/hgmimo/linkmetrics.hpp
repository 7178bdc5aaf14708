// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_LINKMETRICS_HPP
#define HGMIMO_LINKMETRICS_HPP

#include <armadillo>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgmimo/beam.hpp"
#include "hgmimo/geometry.hpp"
#include "hgmimo/units.hpp"

namespace hgmimo {

// ---------------------------------------------------------------- noise ----

struct NoiseConfig
{
    double bandwidth_hz;
    double noise_figure_db;
    double floor_dbm_hz = -174.0; // thermal density at ~290 K
};

inline double noise_power_dbm(const NoiseConfig &cfg)
{
    if (!(cfg.bandwidth_hz > 0.0))
        throw std::invalid_argument("noise_power_dbm: bandwidth must be > 0");
    if (cfg.noise_figure_db < 0.0)
        throw std::invalid_argument("noise_power_dbm: noise figure must be >= 0");
    return cfg.floor_dbm_hz + 10.0 * std::log10(cfg.bandwidth_hz) + cfg.noise_figure_db;
}

// ------------------------------------------------------------------ MCS ----

// Highest 64-QAM CQI efficiency; SE never exceeds this per stream.
inline constexpr double mcs_se_cap = 5.5547;

struct McsRow
{
    double threshold_db;  // minimum SINR for the row
    double se_bps_per_hz; // spectral efficiency granted at or above it
};

struct McsTable
{
    std::vector<McsRow> rows;
};

inline void validate(const McsTable &table)
{
    if (table.rows.empty())
        throw std::invalid_argument("McsTable: empty table");
    for (std::size_t i = 0; i < table.rows.size(); ++i)
    {
        const McsRow &row = table.rows[i];
        if (!std::isfinite(row.threshold_db) || !(row.se_bps_per_hz > 0.0))
            throw std::invalid_argument("McsTable: rows need finite thresholds and positive SE");
        if (row.se_bps_per_hz > mcs_se_cap + 1e-12)
            throw std::invalid_argument("McsTable: SE above the 64-QAM cap");
        if (i > 0)
        {
            if (!(row.threshold_db > table.rows[i - 1].threshold_db))
                throw std::invalid_argument("McsTable: thresholds must be strictly increasing");
            if (row.se_bps_per_hz < table.rows[i - 1].se_bps_per_hz)
                throw std::invalid_argument("McsTable: efficiencies must be non-decreasing");
        }
    }
}

// CQI table 1 efficiencies (QPSK through 64-QAM) with AWGN capacity
// thresholds 10 log10(2^eff - 1) shifted by an implementation margin.
inline McsTable default_mcs_table(double margin_db = 2.0)
{
    static const double eff[15] = {0.1523, 0.2344, 0.3770, 0.6016, 0.8770,
                                   1.1758, 1.4766, 1.9141, 2.4063, 2.7305,
                                   3.3223, 3.9023, 4.5234, 5.1152, 5.5547};
    McsTable table;
    table.rows.reserve(15);
    for (double e : eff)
        table.rows.push_back({10.0 * std::log10(std::pow(2.0, e) - 1.0) + margin_db, e});
    validate(table);
    return table;
}

// Loads "cqi,threshold_db,efficiency" CSV rows; '#' lines and the header are
// skipped.
inline McsTable load_mcs_table(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_mcs_table: cannot open " + path);

    McsTable table;
    std::string line;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#' || line.rfind("cqi", 0) == 0)
            continue;
        std::istringstream ss(line);
        std::string cell;
        McsRow row{};
        if (!std::getline(ss, cell, ','))
            continue;
        if (!std::getline(ss, cell, ','))
            throw std::runtime_error("load_mcs_table: malformed row '" + line + "'");
        row.threshold_db = std::stod(cell);
        if (!std::getline(ss, cell, ','))
            throw std::runtime_error("load_mcs_table: malformed row '" + line + "'");
        row.se_bps_per_hz = std::stod(cell);
        table.rows.push_back(row);
    }
    validate(table);
    return table;
}

// SE of the highest row whose threshold is <= sinr_db (inclusive), 0 below
// the lowest threshold.
inline double se_from_sinr(double sinr_db, const McsTable &table)
{
    validate(table);
    double se = 0.0;
    for (const McsRow &row : table.rows)
    {
        if (sinr_db < row.threshold_db)
            break;
        se = row.se_bps_per_hz;
    }
    return se;
}

// --------------------------------------------------------------- report ----

struct LinkReport
{
    std::string scheme;       // "hg" or "svd"
    std::string polarization; // "uni" or "cross"
    std::vector<Mode> modes;  // per stream; repeats once per polarization
    arma::vec sinr_db;
    arma::vec se_bps_per_hz;
    double total_se = 0.0;
    double throughput_bps = 0.0;
};

// Maps per-stream SINRs through the MCS table and totals them; throughput is
// exactly total SE times bandwidth.
inline LinkReport make_link_report(std::string scheme, std::string polarization,
                                   std::vector<Mode> modes, const arma::vec &sinr_linear,
                                   const McsTable &table, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("make_link_report: bandwidth must be > 0");
    if (modes.size() != sinr_linear.n_elem)
        throw std::invalid_argument("make_link_report: one mode label per stream required");

    LinkReport report;
    report.scheme = std::move(scheme);
    report.polarization = std::move(polarization);
    report.modes = std::move(modes);
    report.sinr_db.set_size(sinr_linear.n_elem);
    report.se_bps_per_hz.set_size(sinr_linear.n_elem);
    for (arma::uword k = 0; k < sinr_linear.n_elem; ++k)
    {
        report.sinr_db(k) = sinr_linear(k) > 0.0 ? linear_to_db(sinr_linear(k)) :
                                                   -std::numeric_limits<double>::infinity();
        report.se_bps_per_hz(k) = se_from_sinr(report.sinr_db(k), table);
        report.total_se += report.se_bps_per_hz(k);
    }
    report.throughput_bps = report.total_se * bandwidth_hz;
    return report;
}

// ---------------------------------------------------------------- grids ----

// Rectangular sample grid of real power values; values in x-major order with
// the y index running fastest, axes either in meters or in units of the local
// beam radius.
struct FieldGrid
{
    int nx = 0;
    int ny = 0;
    double x0 = 0.0; // first sample coordinate
    double y0 = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    bool axes_in_waists = true;
    std::vector<double> values;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * ny + iy]; }
};

// Mode-power-weighted intensity sum sampled on a (possibly tilted) plane
// through (0, 0, plane_z); tilting pivots the plane about that point. Extent
// is half the side length, in units of w(plane_z) when axes_in_waists.
inline FieldGrid power_profile(const GaussianBeam &beam, const std::vector<Mode> &modes,
                               const arma::vec &power_w, double plane_z, const Tilt &tilt,
                               double extent, int n_side, bool axes_in_waists = true)
{
    if (modes.size() != power_w.n_elem)
        throw std::invalid_argument("power_profile: one power entry per mode required");
    if (!(extent > 0.0) || n_side < 2)
        throw std::invalid_argument("power_profile: need positive extent and at least 2 samples per side");

    const double w = beam_radius(beam, plane_z);
    const double scale = axes_in_waists ? w : 1.0;

    FieldGrid grid;
    grid.nx = grid.ny = n_side;
    grid.x0 = grid.y0 = -extent;
    grid.dx = grid.dy = 2.0 * extent / (n_side - 1);
    grid.axes_in_waists = axes_in_waists;
    grid.values.resize(static_cast<std::size_t>(n_side) * n_side);

    const Mat3 rot = rotation_matrix(tilt);
    const Vec3 c{0.0, 0.0, plane_z};
    for (int ix = 0; ix < n_side; ++ix)
        for (int iy = 0; iy < n_side; ++iy)
        {
            const Vec3 flat{(grid.x0 + ix * grid.dx) * scale, (grid.y0 + iy * grid.dy) * scale, plane_z};
            const Vec3 p = c + rot * (flat - c);
            double acc = 0.0;
            for (std::size_t k = 0; k < modes.size(); ++k)
                acc += power_w(k) * std::norm(hg_field(beam, modes[k].l, modes[k].m, p.x, p.y, p.z));
            grid.values[static_cast<std::size_t>(ix) * n_side + iy] = acc;
        }
    return grid;
}

// Grid sum times the physical cell area.
inline double grid_power(const FieldGrid &grid, const GaussianBeam &beam, double plane_z)
{
    const double scale = grid.axes_in_waists ? beam_radius(beam, plane_z) : 1.0;
    double acc = 0.0;
    for (double v : grid.values)
        acc += v;
    return acc * grid.dx * grid.dy * scale * scale;
}

// ---------------------------------------------------------------- sweep ----

struct CaptureRow
{
    Mode mode;
    double s_over_w;
    double efficiency;
};

// Capture efficiency of every mode at every aperture size, mode-major.
inline std::vector<CaptureRow> capture_sweep(const std::vector<Mode> &modes,
                                             const std::vector<double> &sizes_over_w)
{
    if (modes.empty() || sizes_over_w.empty())
        throw std::invalid_argument("capture_sweep: need modes and sizes");
    std::vector<CaptureRow> rows;
    rows.reserve(modes.size() * sizes_over_w.size());
    for (const Mode &mode : modes)
        for (double s : sizes_over_w)
            rows.push_back({mode, s, capture_efficiency(mode.l, mode.m, s)});
    return rows;
}

} // namespace hgmimo

#endif // HGMIMO_LINKMETRICS_HPP
