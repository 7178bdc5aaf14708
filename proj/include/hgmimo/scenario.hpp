// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_SCENARIO_HPP
#define HGMIMO_SCENARIO_HPP

#include <armadillo>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hgmimo/channel.hpp"
#include "hgmimo/config.hpp"
#include "hgmimo/linkmetrics.hpp"
#include "hgmimo/txrx.hpp"
#include "hgmimo/units.hpp"

namespace hgmimo {

enum class Scheme
{
    hg,
    svd,
    both,
};

enum class Polarization
{
    uni,
    cross,
};

// Full simulation setup. Angles are kept in degrees here because that is the
// config-file unit; the math layer converts to radians at the point of use.
struct ScenarioConfig
{
    std::string name = "custom";

    double frequency_hz = 3.0e11;
    double bandwidth_hz = 2.0e9;
    double distance_m = 20.0;
    double tx_power_dbm = -6.0;
    double waist_m = 0.0; // 0 selects the optimal waist for the span

    int l_max = 5;
    int m_max = 5;

    int tx_half_x = 35;
    int tx_half_y = 35;
    double tx_spacing_m = 0.005;
    int rx_half_x = 35;
    int rx_half_y = 35;
    double rx_spacing_m = 0.005;

    double tilt_x_deg = 0.0;
    double tilt_y_deg = 0.0;

    Scheme scheme = Scheme::both;
    Polarization polarization = Polarization::uni;

    PatternKind pattern_kind = PatternKind::sector_38901;
    double pattern_max_gain_dbi = 8.0;

    double noise_figure_db = 8.0;
    double noise_floor_dbm_hz = -174.0;

    double mcs_margin_db = 2.0;
    std::string mcs_table_path; // empty selects the built-in table

    int block_rows = 256;

    friend bool operator==(const ScenarioConfig &, const ScenarioConfig &) = default;
};

inline double wavelength_m(const ScenarioConfig &cfg) { return speed_of_light / cfg.frequency_hz; }

inline void validate(const ScenarioConfig &cfg)
{
    if (!(cfg.frequency_hz > 0.0))
        throw std::invalid_argument("scenario: carrier frequency must be > 0");
    if (!(cfg.bandwidth_hz > 0.0))
        throw std::invalid_argument("scenario: bandwidth must be > 0");
    if (!(cfg.distance_m > 0.0))
        throw std::invalid_argument("scenario: link distance must be > 0");
    if (!std::isfinite(cfg.tx_power_dbm))
        throw std::invalid_argument("scenario: TX power must be finite");
    if (cfg.waist_m < 0.0)
        throw std::invalid_argument("scenario: waist must be > 0 (or 0 for optimal)");
    if (cfg.l_max < 0 || cfg.m_max < 0 || cfg.l_max > hermite_order_cap || cfg.m_max > hermite_order_cap)
        throw std::invalid_argument("scenario: mode orders must lie in [0, 64]");
    if (cfg.tx_half_x < 0 || cfg.tx_half_y < 0 || cfg.rx_half_x < 0 || cfg.rx_half_y < 0)
        throw std::invalid_argument("scenario: array half counts must be >= 0");
    if (!(cfg.tx_spacing_m > 0.0) || !(cfg.rx_spacing_m > 0.0))
        throw std::invalid_argument("scenario: element spacing must be > 0");
    if (!std::isfinite(cfg.tilt_x_deg) || !std::isfinite(cfg.tilt_y_deg))
        throw std::invalid_argument("scenario: tilt angles must be finite");
    if (cfg.noise_figure_db < 0.0)
        throw std::invalid_argument("scenario: noise figure must be >= 0");
    if (!std::isfinite(cfg.mcs_margin_db) || !std::isfinite(cfg.pattern_max_gain_dbi))
        throw std::invalid_argument("scenario: margins and gains must be finite");
    if (cfg.block_rows < 1)
        throw std::invalid_argument("scenario: block_rows must be >= 1");
}

// ------------------------------------------------------------- presets ----

// 300 GHz, 20 m span, 71x71 half-wavelength-ish panels, modes up to (5,5),
// sectorized 8 dBi elements.
inline ScenarioConfig table1_preset()
{
    ScenarioConfig cfg;
    cfg.name = "table1";
    return cfg;
}

// Bench-scale variant that runs the identical pipeline in well under a
// second: 2 m span, 21x21 panels, modes up to (2,2), isotropic elements.
inline ScenarioConfig desk_preset()
{
    ScenarioConfig cfg;
    cfg.name = "desk";
    cfg.distance_m = 2.0;
    cfg.tx_power_dbm = 20.0;
    cfg.l_max = 2;
    cfg.m_max = 2;
    cfg.tx_half_x = cfg.tx_half_y = cfg.rx_half_x = cfg.rx_half_y = 10;
    cfg.tx_spacing_m = cfg.rx_spacing_m = 0.0055;
    cfg.pattern_kind = PatternKind::isotropic;
    return cfg;
}

// --------------------------------------------------------- serialization ----

namespace detail {

inline std::string scheme_name(Scheme s)
{
    switch (s)
    {
    case Scheme::hg: return "hg";
    case Scheme::svd: return "svd";
    default: return "both";
    }
}

inline Scheme parse_scheme(const std::string &v)
{
    if (v == "hg")
        return Scheme::hg;
    if (v == "svd")
        return Scheme::svd;
    if (v == "both")
        return Scheme::both;
    throw ConfigError("key 'run.scheme': expected hg, svd or both, got '" + v + "'");
}

inline std::string polarization_name(Polarization p)
{
    return p == Polarization::cross ? "cross" : "uni";
}

inline Polarization parse_polarization(const std::string &v)
{
    if (v == "uni")
        return Polarization::uni;
    if (v == "cross")
        return Polarization::cross;
    throw ConfigError("key 'run.polarization': expected uni or cross, got '" + v + "'");
}

inline std::string pattern_name(PatternKind k)
{
    return k == PatternKind::sector_38901 ? "sector_38901" : "isotropic";
}

inline PatternKind parse_pattern(const std::string &v)
{
    if (v == "isotropic")
        return PatternKind::isotropic;
    if (v == "sector_38901")
        return PatternKind::sector_38901;
    throw ConfigError("key 'pattern.kind': expected isotropic or sector_38901, got '" + v + "'");
}

} // namespace detail

inline ConfigMap scenario_to_map(const ScenarioConfig &cfg)
{
    ConfigMap map;
    map["scenario.name"] = cfg.name;
    map["carrier.frequency_hz"] = format_double(cfg.frequency_hz);
    map["carrier.bandwidth_hz"] = format_double(cfg.bandwidth_hz);
    map["link.distance_m"] = format_double(cfg.distance_m);
    map["link.tx_power_dbm"] = format_double(cfg.tx_power_dbm);
    map["beam.waist_m"] = cfg.waist_m == 0.0 ? "optimal" : format_double(cfg.waist_m);
    map["modes.l_max"] = std::to_string(cfg.l_max);
    map["modes.m_max"] = std::to_string(cfg.m_max);
    map["tx.half_count_x"] = std::to_string(cfg.tx_half_x);
    map["tx.half_count_y"] = std::to_string(cfg.tx_half_y);
    map["tx.spacing_m"] = format_double(cfg.tx_spacing_m);
    map["rx.half_count_x"] = std::to_string(cfg.rx_half_x);
    map["rx.half_count_y"] = std::to_string(cfg.rx_half_y);
    map["rx.spacing_m"] = format_double(cfg.rx_spacing_m);
    map["tilt.theta_x_deg"] = format_double(cfg.tilt_x_deg);
    map["tilt.theta_y_deg"] = format_double(cfg.tilt_y_deg);
    map["run.scheme"] = detail::scheme_name(cfg.scheme);
    map["run.polarization"] = detail::polarization_name(cfg.polarization);
    map["pattern.kind"] = detail::pattern_name(cfg.pattern_kind);
    map["pattern.max_gain_dbi"] = format_double(cfg.pattern_max_gain_dbi);
    map["noise.figure_db"] = format_double(cfg.noise_figure_db);
    map["noise.floor_dbm_hz"] = format_double(cfg.noise_floor_dbm_hz);
    map["mcs.margin_db"] = format_double(cfg.mcs_margin_db);
    map["mcs.table"] = cfg.mcs_table_path.empty() ? "builtin" : cfg.mcs_table_path;
    map["channel.block_rows"] = std::to_string(cfg.block_rows);
    return map;
}

// Applies map entries over the defaults; unknown keys are errors so typos
// cannot silently fall back.
inline ScenarioConfig scenario_from_map(const ConfigMap &map)
{
    ScenarioConfig cfg;
    for (const auto &[key, value] : map)
    {
        if (key == "scenario.name")
            cfg.name = value;
        else if (key == "carrier.frequency_hz")
            cfg.frequency_hz = parse_double(key, value);
        else if (key == "carrier.bandwidth_hz")
            cfg.bandwidth_hz = parse_double(key, value);
        else if (key == "link.distance_m")
            cfg.distance_m = parse_double(key, value);
        else if (key == "link.tx_power_dbm")
            cfg.tx_power_dbm = parse_double(key, value);
        else if (key == "beam.waist_m")
            cfg.waist_m = value == "optimal" ? 0.0 : parse_double(key, value);
        else if (key == "modes.l_max")
            cfg.l_max = parse_int(key, value);
        else if (key == "modes.m_max")
            cfg.m_max = parse_int(key, value);
        else if (key == "tx.half_count_x")
            cfg.tx_half_x = parse_int(key, value);
        else if (key == "tx.half_count_y")
            cfg.tx_half_y = parse_int(key, value);
        else if (key == "tx.spacing_m")
            cfg.tx_spacing_m = parse_double(key, value);
        else if (key == "rx.half_count_x")
            cfg.rx_half_x = parse_int(key, value);
        else if (key == "rx.half_count_y")
            cfg.rx_half_y = parse_int(key, value);
        else if (key == "rx.spacing_m")
            cfg.rx_spacing_m = parse_double(key, value);
        else if (key == "tilt.theta_x_deg")
            cfg.tilt_x_deg = parse_double(key, value);
        else if (key == "tilt.theta_y_deg")
            cfg.tilt_y_deg = parse_double(key, value);
        else if (key == "run.scheme")
            cfg.scheme = detail::parse_scheme(value);
        else if (key == "run.polarization")
            cfg.polarization = detail::parse_polarization(value);
        else if (key == "pattern.kind")
            cfg.pattern_kind = detail::parse_pattern(value);
        else if (key == "pattern.max_gain_dbi")
            cfg.pattern_max_gain_dbi = parse_double(key, value);
        else if (key == "noise.figure_db")
            cfg.noise_figure_db = parse_double(key, value);
        else if (key == "noise.floor_dbm_hz")
            cfg.noise_floor_dbm_hz = parse_double(key, value);
        else if (key == "mcs.margin_db")
            cfg.mcs_margin_db = parse_double(key, value);
        else if (key == "mcs.table")
            cfg.mcs_table_path = value == "builtin" ? std::string() : value;
        else if (key == "channel.block_rows")
            cfg.block_rows = parse_int(key, value);
        else
            throw ConfigError("unknown config key '" + key + "'");
    }
    return cfg;
}

// ---------------------------------------------------------- orchestration ----

// Everything the channel stage needs, derived from a ScenarioConfig.
struct ScenarioParts
{
    GaussianBeam beam;
    ApertureSide tx;
    ApertureSide rx;
    FilterMatrix w_tx;
    FilterMatrix w_rx;
    ElementPattern pattern;
    std::vector<Mode> modes;
    double wavelength;
    double noise_w;
};

inline GaussianBeam scenario_beam(const ScenarioConfig &cfg)
{
    const double lambda = wavelength_m(cfg);
    const double w0 = cfg.waist_m > 0.0 ? cfg.waist_m : optimize_waist(lambda, cfg.distance_m);
    return GaussianBeam(w0, lambda);
}

// Builds beam, tilted TX aperture, canonical RX aperture, and both filter
// banks. The focus sits midway, so the panels live at -+ distance/2; the tilt
// pivots the TX panel (and its boresight) about the panel center.
inline ScenarioParts build_scenario(const ScenarioConfig &cfg)
{
    validate(cfg);

    const double z_tx = -0.5 * cfg.distance_m;
    const double z_rx = +0.5 * cfg.distance_m;
    const Tilt tilt{deg_to_rad(cfg.tilt_x_deg), deg_to_rad(cfg.tilt_y_deg)};

    const PlanarArray tx_array(cfg.tx_half_x, cfg.tx_half_y, cfg.tx_spacing_m, z_tx);
    const PlanarArray rx_array(cfg.rx_half_x, cfg.rx_half_y, cfg.rx_spacing_m, z_rx);

    ScenarioParts parts{
        scenario_beam(cfg),
        {steered_sample_points(tx_array, tilt), steered_frame(tx_frame(), tilt)},
        {element_positions(rx_array), rx_frame()},
        {},
        {},
        {cfg.pattern_kind, cfg.pattern_max_gain_dbi},
        mode_grid(cfg.l_max, cfg.m_max),
        wavelength_m(cfg),
        dbm_to_watt(noise_power_dbm({cfg.bandwidth_hz, cfg.noise_figure_db, cfg.noise_floor_dbm_hz})),
    };
    parts.w_tx = mode_filters(parts.beam, parts.tx.points, parts.modes);
    parts.w_rx = mode_filters(parts.beam, parts.rx.points, parts.modes);
    return parts;
}

inline McsTable scenario_mcs_table(const ScenarioConfig &cfg)
{
    return cfg.mcs_table_path.empty() ? default_mcs_table(cfg.mcs_margin_db)
                                      : load_mcs_table(cfg.mcs_table_path);
}

struct SimulationResult
{
    EffectiveChannel eff;
    double noise_dbm = 0.0;
    std::vector<LinkReport> reports; // one per scheme requested
};

namespace detail {

inline LinkReport report_for_scheme(const ScenarioConfig &cfg, const EffectiveChannel &eff,
                                    const std::vector<Mode> &modes, double noise_w,
                                    const McsTable &table, Scheme scheme)
{
    arma::cx_mat h = eff.h;
    if (scheme == Scheme::svd)
        h = svd_effective(h, svd_precoder(h));

    std::vector<Mode> stream_modes = modes;
    if (cfg.polarization == Polarization::cross)
    {
        h = cross_polarization_expand(h);
        stream_modes.insert(stream_modes.end(), modes.begin(), modes.end());
    }

    const arma::vec power = equal_power_w(dbm_to_watt(cfg.tx_power_dbm), h.n_cols);
    const arma::vec sinr = stream_sinrs(h, power, noise_w);
    return make_link_report(scheme_name(scheme), polarization_name(cfg.polarization),
                            std::move(stream_modes), sinr, table, cfg.bandwidth_hz);
}

} // namespace detail

// Runs the full pipeline once: filters, streamed effective channel, then one
// link report per requested scheme over the requested polarization.
inline SimulationResult simulate(const ScenarioConfig &cfg)
{
    const ScenarioParts parts = build_scenario(cfg);
    const McsTable table = scenario_mcs_table(cfg);

    SimulationResult result;
    result.eff = effective_channel(parts.wavelength, parts.tx, parts.w_tx, parts.rx, parts.w_rx,
                                   parts.pattern, static_cast<std::size_t>(cfg.block_rows));
    result.noise_dbm = noise_power_dbm({cfg.bandwidth_hz, cfg.noise_figure_db, cfg.noise_floor_dbm_hz});

    if (cfg.scheme == Scheme::hg || cfg.scheme == Scheme::both)
        result.reports.push_back(detail::report_for_scheme(cfg, result.eff, parts.modes,
                                                           parts.noise_w, table, Scheme::hg));
    if (cfg.scheme == Scheme::svd || cfg.scheme == Scheme::both)
        result.reports.push_back(detail::report_for_scheme(cfg, result.eff, parts.modes,
                                                           parts.noise_w, table, Scheme::svd));
    return result;
}

struct SweepRow
{
    double tilt_x_deg = 0.0;
    double tilt_y_deg = 0.0;
    std::string scheme;
    std::string polarization;
    arma::uword n_streams = 0;
    double total_se = 0.0;
    double throughput_bps = 0.0;
    double min_sinr_db = 0.0;
    double max_sinr_db = 0.0;
};

// One simulate() per tilt; each produces one row per requested scheme.
inline std::vector<SweepRow> steer_sweep(const ScenarioConfig &base,
                                         const std::vector<std::pair<double, double>> &tilts_deg)
{
    if (tilts_deg.empty())
        throw std::invalid_argument("steer_sweep: no tilts given");

    std::vector<SweepRow> rows;
    for (const auto &[tx_deg, ty_deg] : tilts_deg)
    {
        ScenarioConfig cfg = base;
        cfg.tilt_x_deg = tx_deg;
        cfg.tilt_y_deg = ty_deg;
        const SimulationResult result = simulate(cfg);
        for (const LinkReport &report : result.reports)
            rows.push_back({tx_deg, ty_deg, report.scheme, report.polarization,
                            report.sinr_db.n_elem, report.total_se, report.throughput_bps,
                            report.sinr_db.min(), report.sinr_db.max()});
    }
    return rows;
}

} // namespace hgmimo

#endif // HGMIMO_SCENARIO_HPP
