// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_UNITS_HPP
#define HGMIMO_UNITS_HPP

#include <armadillo>
#include <cmath>

namespace hgmimo {

inline constexpr double speed_of_light = 299792458.0; // m/s

inline double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

inline double watt_to_dbm(double watt) { return 10.0 * std::log10(watt / 1e-3); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double deg_to_rad(double deg) { return deg * arma::datum::pi / 180.0; }

inline double rad_to_deg(double rad) { return rad * 180.0 / arma::datum::pi; }

} // namespace hgmimo

#endif // HGMIMO_UNITS_HPP
