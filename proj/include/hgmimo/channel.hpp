// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_CHANNEL_HPP
#define HGMIMO_CHANNEL_HPP

#include <armadillo>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hgmimo/filters.hpp"
#include "hgmimo/geometry.hpp"
#include "hgmimo/pattern.hpp"
#include "hgmimo/units.hpp"

namespace hgmimo {

// One aperture: element centers (possibly tilted) plus the panel orientation
// the element pattern is evaluated in.
struct ApertureSide
{
    std::vector<Vec3> points;
    PanelFrame frame;
};

// Free-space element-to-element response lambda/(4 pi r) exp(-i 2 pi r / lambda),
// with any antenna gains folded in as a field factor.
inline std::complex<double> element_channel(double wavelength, const Vec3 &tx, const Vec3 &rx,
                                            double extra_gain_db = 0.0)
{
    if (!(wavelength > 0.0))
        throw std::invalid_argument("element_channel: wavelength must be > 0");
    const double r = norm(rx - tx);
    if (!(r > 0.0))
        throw std::domain_error("element_channel: coincident elements");
    const double amp = wavelength / (4.0 * arma::datum::pi * r) * std::pow(10.0, extra_gain_db / 20.0);
    return std::polar(amp, -2.0 * arma::datum::pi * r / wavelength);
}

namespace detail {

inline void check_channel_args(double wavelength, const ApertureSide &tx, const ApertureSide &rx)
{
    if (!(wavelength > 0.0))
        throw std::invalid_argument("channel: wavelength must be > 0");
    if (tx.points.empty() || rx.points.empty())
        throw std::invalid_argument("channel: empty aperture");
}

// Rows [r0, r0+nb) of the element channel matrix (n_rx x n_tx).
inline void fill_channel_block(arma::cx_mat &block, double wavelength,
                               const ApertureSide &tx, const ApertureSide &rx,
                               const ElementPattern &pattern, std::size_t r0)
{
    const double k0 = 2.0 * arma::datum::pi / wavelength;
    const double amp0 = wavelength / (4.0 * arma::datum::pi);
    const bool directive = pattern.kind != PatternKind::isotropic;

    for (arma::uword bi = 0; bi < block.n_rows; ++bi)
    {
        const Vec3 &p_rx = rx.points[r0 + bi];
        for (std::size_t j = 0; j < tx.points.size(); ++j)
        {
            const Vec3 d = p_rx - tx.points[j];
            const double r = norm(d);
            if (!(r > 0.0))
                throw std::domain_error("channel: coincident TX/RX elements");
            double amp = amp0 / r;
            if (directive)
            {
                const Vec3 u = (1.0 / r) * d;
                const double g = element_gain_dbi(pattern, tx.frame, u) +
                                 element_gain_dbi(pattern, rx.frame, {-u.x, -u.y, -u.z});
                amp *= std::pow(10.0, g / 20.0);
            }
            block(bi, j) = std::polar(amp, -k0 * r);
        }
    }
}

} // namespace detail

// Dense element channel matrix; memory grows with n_rx * n_tx, intended for
// small apertures. Large apertures go through effective_channel/channel_apply.
inline arma::cx_mat physical_channel(double wavelength, const ApertureSide &tx, const ApertureSide &rx,
                                     const ElementPattern &pattern = {})
{
    detail::check_channel_args(wavelength, tx, rx);
    arma::cx_mat g(rx.points.size(), tx.points.size());
    detail::fill_channel_block(g, wavelength, tx, rx, pattern, 0);
    return g;
}

// y = G x for per-element TX signals x (n_tx x T), streaming G in row blocks
// so the full matrix never materializes. Accumulation order is fixed, so
// results are bit-reproducible run to run.
inline arma::cx_mat channel_apply(double wavelength, const ApertureSide &tx, const ApertureSide &rx,
                                  const ElementPattern &pattern, const arma::cx_mat &x,
                                  std::size_t block_rows = 256)
{
    detail::check_channel_args(wavelength, tx, rx);
    if (x.n_rows != tx.points.size())
        throw std::invalid_argument("channel_apply: signal rows must match TX element count");
    if (block_rows == 0)
        throw std::invalid_argument("channel_apply: block_rows must be >= 1");

    arma::cx_mat y(rx.points.size(), x.n_cols, arma::fill::zeros);
    arma::cx_mat block;
    for (std::size_t r0 = 0; r0 < rx.points.size(); r0 += block_rows)
    {
        const std::size_t nb = std::min(block_rows, rx.points.size() - r0);
        block.set_size(nb, tx.points.size());
        detail::fill_channel_block(block, wavelength, tx, rx, pattern, r0);
        y.rows(r0, r0 + nb - 1) = block * x;
    }
    return y;
}

// Mode-domain channel: RX filter adjoint x element channel x TX filters.
struct EffectiveChannel
{
    arma::cx_mat h; // n_rx_modes x n_tx_modes
    std::vector<Mode> tx_modes;
    std::vector<Mode> rx_modes;
};

// Sandwiches the element channel between the mode filters, streaming RX row
// blocks; the element matrix itself is never stored. The RX projection is the
// conjugate of the stored columns, honoring the filter's conjugated flag.
inline EffectiveChannel effective_channel(double wavelength,
                                          const ApertureSide &tx, const FilterMatrix &w_tx,
                                          const ApertureSide &rx, const FilterMatrix &w_rx,
                                          const ElementPattern &pattern = {},
                                          std::size_t block_rows = 256)
{
    detail::check_channel_args(wavelength, tx, rx);
    if (w_tx.w.n_rows != tx.points.size())
        throw std::invalid_argument("effective_channel: TX filter rows must match TX element count");
    if (w_rx.w.n_rows != rx.points.size())
        throw std::invalid_argument("effective_channel: RX filter rows must match RX element count");
    if (block_rows == 0)
        throw std::invalid_argument("effective_channel: block_rows must be >= 1");

    EffectiveChannel eff;
    eff.tx_modes = w_tx.modes;
    eff.rx_modes = w_rx.modes;
    eff.h.zeros(w_rx.w.n_cols, w_tx.w.n_cols);

    // TX excitation uses the plain columns; a conjugated TX filter undoes it
    const arma::cx_mat w_t = w_tx.conjugated ? arma::cx_mat(arma::conj(w_tx.w)) : w_tx.w;

    arma::cx_mat block;
    for (std::size_t r0 = 0; r0 < rx.points.size(); r0 += block_rows)
    {
        const std::size_t nb = std::min(block_rows, rx.points.size() - r0);
        block.set_size(nb, tx.points.size());
        detail::fill_channel_block(block, wavelength, tx, rx, pattern, r0);

        const arma::cx_mat gw = block * w_t;
        const arma::cx_mat w_r = w_rx.w.rows(r0, r0 + nb - 1);
        eff.h += w_rx.conjugated ? arma::cx_mat(w_r.st() * gw) : arma::cx_mat(w_r.t() * gw);
    }
    return eff;
}

} // namespace hgmimo

#endif // HGMIMO_CHANNEL_HPP
