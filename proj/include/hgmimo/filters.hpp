// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_FILTERS_HPP
#define HGMIMO_FILTERS_HPP

#include <armadillo>
#include <stdexcept>
#include <vector>

#include "hgmimo/beam.hpp"
#include "hgmimo/geometry.hpp"

namespace hgmimo {

// Per-element mode coefficients, one unit-norm column per mode. With
// conjugated = false the columns hold plain field samples (TX excitation);
// the receive projection conjugates them through the adjoint in the
// effective-channel sandwich.
struct FilterMatrix
{
    arma::cx_mat w; // n_elements x n_modes
    std::vector<Mode> modes;
    bool conjugated = false;
};

// Samples each HG mode of the beam at the given element positions and
// normalizes every column to unit energy.
inline FilterMatrix mode_filters(const GaussianBeam &beam, const std::vector<Vec3> &points,
                                 const std::vector<Mode> &modes)
{
    if (points.empty())
        throw std::invalid_argument("mode_filters: no sample points");
    if (modes.empty())
        throw std::invalid_argument("mode_filters: no modes");

    FilterMatrix filters;
    filters.modes = modes;
    filters.w.set_size(points.size(), modes.size());
    for (std::size_t k = 0; k < modes.size(); ++k)
    {
        for (std::size_t i = 0; i < points.size(); ++i)
            filters.w(i, k) = hg_field(beam, modes[k].l, modes[k].m, points[i].x, points[i].y, points[i].z);

        const double nrm = arma::norm(filters.w.col(k));
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw std::domain_error("mode_filters: mode does not overlap the aperture");
        filters.w.col(k) /= nrm;
    }
    return filters;
}

} // namespace hgmimo

#endif // HGMIMO_FILTERS_HPP
