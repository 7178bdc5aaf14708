// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_BEAM_HPP
#define HGMIMO_BEAM_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hgmimo/hermite.hpp"
#include "hgmimo/quadrature.hpp"

namespace hgmimo {

// Transverse mode indices (l along x, m along y).
struct Mode
{
    int l = 0;
    int m = 0;
    friend bool operator==(const Mode &, const Mode &) = default;
};

// All modes with 0 <= l <= l_max, 0 <= m <= m_max, l-major order.
inline std::vector<Mode> mode_grid(int l_max, int m_max)
{
    if (l_max < 0 || m_max < 0)
        throw std::invalid_argument("mode_grid: mode indices must be >= 0");
    std::vector<Mode> modes;
    modes.reserve(static_cast<std::size_t>(l_max + 1) * (m_max + 1));
    for (int l = 0; l <= l_max; ++l)
        for (int m = 0; m <= m_max; ++m)
            modes.push_back({l, m});
    return modes;
}

// Focused Gaussian beam; the focal plane is z = 0.
struct GaussianBeam
{
    double waist;            // w0, m
    double wavelength;       // in vacuum, m
    double refractive_index; // of the propagation medium

    GaussianBeam(double w0, double lambda, double n = 1.0)
        : waist(w0), wavelength(lambda), refractive_index(n)
    {
        if (!(w0 > 0.0))
            throw std::invalid_argument("GaussianBeam: waist must be > 0");
        if (!(lambda > 0.0))
            throw std::invalid_argument("GaussianBeam: wavelength must be > 0");
        if (!(n > 0.0))
            throw std::invalid_argument("GaussianBeam: refractive index must be > 0");
    }

    double rayleigh_range() const
    {
        return arma::datum::pi * waist * waist * refractive_index / wavelength;
    }

    double wavenumber() const
    {
        return 2.0 * arma::datum::pi * refractive_index / wavelength;
    }
};

// Beam radius w(z) = w0 sqrt(1 + (z/zR)^2).
inline double beam_radius(const GaussianBeam &beam, double z)
{
    const double zr = beam.rayleigh_range();
    return beam.waist * std::sqrt(1.0 + (z / zr) * (z / zr));
}

// Wavefront curvature 1/R(z) = z / (z^2 + zR^2); finite everywhere, 0 at focus.
inline double curvature(const GaussianBeam &beam, double z)
{
    const double zr = beam.rayleigh_range();
    return z / (z * z + zr * zr);
}

// Gouy phase (1 + l + m) atan(z/zR).
inline double gouy_phase(const GaussianBeam &beam, int l, int m, double z)
{
    detail::check_hermite_order(l);
    detail::check_hermite_order(m);
    return (1.0 + l + m) * std::atan(z / beam.rayleigh_range());
}

// Complex Hermite-Gaussian field HG_{l,m}(x, y, z), orthonormal over any
// transverse plane: int |HG|^2 dx dy = 1.
inline std::complex<double> hg_field(const GaussianBeam &beam, int l, int m,
                                     double x, double y, double z)
{
    detail::check_hermite_order(l);
    detail::check_hermite_order(m);

    const double w = beam_radius(beam, z);
    const double inv_r = curvature(beam, z);
    const double k = beam.wavenumber();
    const double r2 = x * x + y * y;

    // amplitude sqrt(2/pi) 2^{-(l+m)/2} / sqrt(l! m!) evaluated in log space
    const double log_scale = -0.5 * ((l + m) * std::log(2.0) + std::lgamma(l + 1.0) + std::lgamma(m + 1.0));
    const double norm = std::sqrt(2.0 / arma::datum::pi) * std::exp(log_scale);

    const double s = std::sqrt(2.0) / w;
    const double env = (norm / w) * hermite_eval(l, s * x) * hermite_eval(m, s * y) * std::exp(-r2 / (w * w));
    const double phase = gouy_phase(beam, l, m, z) - k * z - 0.5 * k * r2 * inv_r;
    return std::polar(env, phase);
}

// Waist that makes the link distance span exactly two Rayleigh ranges, so the
// beam radius at both terminals is sqrt(2) w0 (the smallest possible there).
inline double optimize_waist(double wavelength, double distance, double refractive_index = 1.0)
{
    if (!(wavelength > 0.0))
        throw std::invalid_argument("optimize_waist: wavelength must be > 0");
    if (!(distance > 0.0))
        throw std::invalid_argument("optimize_waist: distance must be > 0");
    if (!(refractive_index > 0.0))
        throw std::invalid_argument("optimize_waist: refractive index must be > 0");
    return std::sqrt(wavelength * distance / (2.0 * arma::datum::pi * refractive_index));
}

namespace detail {

// 1D power capture of axis mode n inside |x| <= a, in units of the local beam
// radius (w = 1): int u_n(x)^2 dx with u_n^2 = sqrt(2/pi)/(2^n n!) H_n(sqrt2 x)^2 exp(-2x^2).
inline double capture_1d(int n, double a)
{
    // node count grows with both polynomial order and interval width so the
    // Gaussian stays resolved on wide apertures
    const int n_nodes = 20 + 6 * n + 8 * static_cast<int>(std::ceil(a));
    const QuadRule rule = gauss_legendre(n_nodes, -a, a);
    const double scale = std::sqrt(2.0 / arma::datum::pi) * std::exp(-(n * std::log(2.0) + std::lgamma(n + 1.0)));
    double acc = 0.0;
    for (int i = 0; i < n_nodes; ++i)
    {
        const double h = hermite_eval(n, std::sqrt(2.0) * rule.x[i]);
        acc += rule.w[i] * h * h * std::exp(-2.0 * rule.x[i] * rule.x[i]);
    }
    return scale * acc;
}

} // namespace detail

// Fraction of mode (l, m) power falling inside a square aperture of half-side
// s at a plane where the beam radius is w; depends only on s/w and separates
// into a product of per-axis integrals.
inline double capture_efficiency(int l, int m, double s_over_w)
{
    detail::check_hermite_order(l);
    detail::check_hermite_order(m);
    if (!(s_over_w > 0.0))
        throw std::invalid_argument("capture_efficiency: aperture half-side must be > 0");
    return detail::capture_1d(l, s_over_w) * detail::capture_1d(m, s_over_w);
}

// Same, for a physical half-side at distance z along the given beam.
inline double capture_efficiency(const GaussianBeam &beam, int l, int m, double half_side, double z)
{
    return capture_efficiency(l, m, half_side / beam_radius(beam, z));
}

} // namespace hgmimo

#endif // HGMIMO_BEAM_HPP
