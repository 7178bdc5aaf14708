// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_TXRX_HPP
#define HGMIMO_TXRX_HPP

#include <armadillo>
#include <stdexcept>

#include "hgmimo/filters.hpp"

namespace hgmimo {

namespace detail {

inline void check_power_noise(const arma::cx_mat &h, const arma::vec &power_w, double noise_w)
{
    if (power_w.n_elem != h.n_cols)
        throw std::invalid_argument("txrx: one power entry per stream required");
    if (power_w.min() < 0.0)
        throw std::invalid_argument("txrx: stream powers must be >= 0");
    if (!(noise_w > 0.0))
        throw std::invalid_argument("txrx: noise power must be > 0");
}

} // namespace detail

// Equal split of a total power across n streams.
inline arma::vec equal_power_w(double total_w, arma::uword n)
{
    if (!(total_w >= 0.0))
        throw std::invalid_argument("equal_power_w: total power must be >= 0");
    if (n == 0)
        throw std::invalid_argument("equal_power_w: need at least one stream");
    return arma::vec(n, arma::fill::value(total_w / static_cast<double>(n)));
}

// Per-element TX signals for unit-variance stream symbols s (n_streams x T):
// x = W sqrt(diag p) s, so the radiated power per symbol is sum(p).
inline arma::cx_mat tx_signals(const FilterMatrix &filters, const arma::cx_mat &symbols,
                               const arma::vec &power_w)
{
    if (symbols.n_rows != filters.w.n_cols)
        throw std::invalid_argument("tx_signals: one symbol row per mode required");
    if (power_w.n_elem != filters.w.n_cols)
        throw std::invalid_argument("tx_signals: one power entry per mode required");
    if (power_w.min() < 0.0)
        throw std::invalid_argument("tx_signals: stream powers must be >= 0");
    return filters.w * arma::diagmat(arma::conv_to<arma::cx_vec>::from(arma::sqrt(power_w))) * symbols;
}

// Post-equalization SINR of every stream under a joint LMMSE receiver for
// y = H sqrt(diag p) s + n: with A = H sqrt(diag p) and M = I + A^H A / noise,
// SINR_k = 1 / [M^-1]_kk - 1.
inline arma::vec stream_sinrs(const arma::cx_mat &h, const arma::vec &power_w, double noise_w)
{
    detail::check_power_noise(h, power_w, noise_w);

    const arma::cx_mat a = h * arma::diagmat(arma::conv_to<arma::cx_vec>::from(arma::sqrt(power_w)));
    arma::cx_mat m = a.t() * a / noise_w;
    m.diag() += 1.0;

    arma::cx_mat m_inv;
    if (!arma::inv_sympd(m_inv, m) && !arma::inv(m_inv, m))
        throw std::runtime_error("stream_sinrs: MMSE matrix inversion failed");

    arma::vec sinr(h.n_cols);
    for (arma::uword k = 0; k < h.n_cols; ++k)
        sinr(k) = std::max(1.0 / m_inv(k, k).real() - 1.0, 0.0);
    return sinr;
}

// LMMSE symbol estimates for the same model (unit-variance prior):
// s_hat = (A^H A + noise I)^-1 A^H y.
inline arma::cx_mat mmse_estimate(const arma::cx_mat &h, const arma::vec &power_w, double noise_w,
                                  const arma::cx_mat &y)
{
    detail::check_power_noise(h, power_w, noise_w);
    if (y.n_rows != h.n_rows)
        throw std::invalid_argument("mmse_estimate: observation rows must match channel rows");

    const arma::cx_mat a = h * arma::diagmat(arma::conv_to<arma::cx_vec>::from(arma::sqrt(power_w)));
    arma::cx_mat m = a.t() * a;
    m.diag() += noise_w;
    return arma::solve(m, a.t() * y, arma::solve_opts::likely_sympd);
}

// Singular basis of the effective channel, H = U diag(s) V^H.
struct SvdBasis
{
    arma::cx_mat u;
    arma::vec s;
    arma::cx_mat v;
};

inline SvdBasis svd_precoder(const arma::cx_mat &h)
{
    if (h.is_empty())
        throw std::invalid_argument("svd_precoder: empty channel");
    SvdBasis basis;
    if (!arma::svd(basis.u, basis.s, basis.v, h))
        throw std::runtime_error("svd_precoder: SVD failed to converge");
    return basis;
}

// Channel seen after V precoding and U^H combining; diagonal up to the
// steering-induced mismatch of the decomposition.
inline arma::cx_mat svd_effective(const arma::cx_mat &h, const SvdBasis &basis)
{
    return basis.u.t() * h * basis.v;
}

// Ideal dual-polarization extension: two fully isolated copies of the channel,
// block-diagonal, doubling the stream count.
inline arma::cx_mat cross_polarization_expand(const arma::cx_mat &h)
{
    if (h.is_empty())
        throw std::invalid_argument("cross_polarization_expand: empty channel");
    arma::cx_mat h2(2 * h.n_rows, 2 * h.n_cols, arma::fill::zeros);
    h2.submat(0, 0, h.n_rows - 1, h.n_cols - 1) = h;
    h2.submat(h.n_rows, h.n_cols, 2 * h.n_rows - 1, 2 * h.n_cols - 1) = h;
    return h2;
}

} // namespace hgmimo

#endif // HGMIMO_TXRX_HPP
