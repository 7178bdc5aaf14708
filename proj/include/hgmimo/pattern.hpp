// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_PATTERN_HPP
#define HGMIMO_PATTERN_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hgmimo/geometry.hpp"
#include "hgmimo/units.hpp"

namespace hgmimo {

enum class PatternKind
{
    isotropic,
    sector_38901, // 3GPP TR 38.901 single-element pattern, 65 deg HPBW
};

struct ElementPattern
{
    PatternKind kind = PatternKind::isotropic;
    double max_gain_dbi = 8.0; // used by sector_38901 only
};

// Directive gain of one element toward unit direction u, expressed in the
// panel's own frame. u must point away from the panel (departure at TX,
// arrival at RX).
inline double element_gain_dbi(const ElementPattern &pattern, const PanelFrame &frame, const Vec3 &u)
{
    if (pattern.kind == PatternKind::isotropic)
        return 0.0;

    const double az = rad_to_deg(std::atan2(dot(u, frame.right), dot(u, frame.boresight)));
    const double el = rad_to_deg(std::asin(std::clamp(dot(u, frame.up), -1.0, 1.0)));

    const double att_v = std::min(12.0 * (el / 65.0) * (el / 65.0), 30.0);
    const double att_h = std::min(12.0 * (az / 65.0) * (az / 65.0), 30.0);
    const double att = std::min(att_v + att_h, 30.0);
    return pattern.max_gain_dbi - att;
}

} // namespace hgmimo

#endif // HGMIMO_PATTERN_HPP
