// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "hgmimo/beam.hpp"

using namespace hgmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("optimize_waist for a 20 m link at 1 mm wavelength", "[beam]")
{
    const double w0 = optimize_waist(1e-3, 20.0);
    REQUIRE_THAT(w0, WithinRel(0.05641895835477563, 1e-12));
    REQUIRE_THAT(std::sqrt(2.0) * w0, WithinRel(0.07978845608028654, 1e-12));

    // the optimum puts each terminal exactly one Rayleigh range from focus
    const GaussianBeam beam(w0, 1e-3);
    REQUIRE_THAT(beam.rayleigh_range(), WithinRel(10.0, 1e-12));

    // true 300 GHz carrier: same property at its exact wavelength
    const double lambda = 299792458.0 / 3e11;
    const GaussianBeam beam2(optimize_waist(lambda, 20.0), lambda);
    REQUIRE_THAT(beam2.rayleigh_range(), WithinRel(10.0, 1e-12));
}

TEST_CASE("beam radius, curvature and Gouy phase along the axis", "[beam]")
{
    const GaussianBeam beam(0.05, 1e-3);
    const double zr = beam.rayleigh_range();
    REQUIRE_THAT(zr, WithinRel(7.853981633974483, 1e-13));

    REQUIRE_THAT(beam_radius(beam, 0.0), WithinRel(0.05, 1e-15));
    REQUIRE_THAT(beam_radius(beam, zr), WithinRel(0.07071067811865475, 1e-13));
    REQUIRE_THAT(beam_radius(beam, 2.0 * zr), WithinRel(0.11180339887498948, 1e-13));
    REQUIRE_THAT(beam_radius(beam, -zr), WithinRel(beam_radius(beam, zr), 1e-15));

    REQUIRE(curvature(beam, 0.0) == 0.0);
    REQUIRE_THAT(curvature(beam, zr), WithinRel(1.0 / (2.0 * zr), 1e-13));
    REQUIRE_THAT(curvature(beam, -zr), WithinRel(-curvature(beam, zr), 1e-15));

    REQUIRE_THAT(gouy_phase(beam, 0, 0, zr), WithinRel(0.7853981633974483, 1e-13));
    REQUIRE_THAT(gouy_phase(beam, 2, 1, zr), WithinRel(arma::datum::pi, 1e-13));
    REQUIRE(gouy_phase(beam, 0, 0, 0.0) == 0.0);
}

TEST_CASE("fundamental mode amplitude at the focus", "[beam]")
{
    const GaussianBeam beam(0.05641895835477563, 1e-3);
    const std::complex<double> v = hg_field(beam, 0, 0, 0.0, 0.0, 0.0);
    REQUIRE_THAT(v.real(), WithinRel(14.142135623730951, 1e-12));
    REQUIRE_THAT(v.imag(), WithinAbs(0.0, 1e-12));

    // odd-order factors vanish on their axis
    REQUIRE_THAT(std::abs(hg_field(beam, 1, 0, 0.0, 0.0, 0.0)), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(std::abs(hg_field(beam, 0, 3, 0.2, 0.0, 5.0)), WithinAbs(0.0, 1e-9));
}

TEST_CASE("HG modes are orthonormal on a curved-wavefront plane", "[beam]")
{
    const GaussianBeam beam(0.05, 1e-3);
    const double z = beam.rayleigh_range();
    const double w = beam_radius(beam, z);

    const QuadRule rule = gauss_legendre(160, -8.0 * w, 8.0 * w);
    const std::vector<Mode> modes = {{0, 0}, {1, 0}, {2, 1}, {3, 3}, {5, 2}};

    const std::size_t n_nodes = rule.x.size();
    const std::size_t n_modes = modes.size();
    std::vector<std::complex<double>> fields(n_modes * n_nodes * n_nodes);
    for (std::size_t k = 0; k < n_modes; ++k)
        for (std::size_t i = 0; i < n_nodes; ++i)
            for (std::size_t j = 0; j < n_nodes; ++j)
                fields[(k * n_nodes + i) * n_nodes + j] =
                    hg_field(beam, modes[k].l, modes[k].m, rule.x[i], rule.x[j], z);

    for (std::size_t a = 0; a < n_modes; ++a)
        for (std::size_t b = 0; b < n_modes; ++b)
        {
            std::complex<double> overlap = 0.0;
            for (std::size_t i = 0; i < n_nodes; ++i)
                for (std::size_t j = 0; j < n_nodes; ++j)
                    overlap += rule.w[i] * rule.w[j] *
                               fields[(a * n_nodes + i) * n_nodes + j] *
                               std::conj(fields[(b * n_nodes + i) * n_nodes + j]);
            const double expected = (a == b) ? 1.0 : 0.0;
            REQUIRE_THAT(std::abs(overlap), WithinAbs(expected, 1e-9));
        }
}

TEST_CASE("capture efficiency separates into frozen per-axis integrals", "[beam]")
{
    // c_n(a) = int_{-a}^{a} u_n^2, w = 1, for n = 0..5
    const double a_vals[4] = {0.5, 1.0, 1.5, 2.2};
    const double c1d[4][6] = {
        {0.682689492137, 0.198748043099, 0.198748043099, 0.198748043099, 0.118091134926, 0.166485279830},
        {0.954499736104, 0.738535870051, 0.414590070972, 0.306608137945, 0.351600610040, 0.270614160270},
        {0.997300203937, 0.970709113465, 0.864344751579, 0.651616027806, 0.452182849268, 0.412296213561},
        {0.999989174912, 0.999769681165, 0.997754728564, 0.986766520382, 0.947618096149, 0.853714714005}};

    for (int s = 0; s < 4; ++s)
        for (int l = 0; l <= 5; ++l)
            for (int m = 0; m <= 5; ++m)
                REQUIRE_THAT(capture_efficiency(l, m, a_vals[s]),
                             WithinRel(c1d[s][l] * c1d[s][m], 1e-8));
}

TEST_CASE("capture efficiency reference points", "[beam]")
{
    // (0,0) inside s = w captures erf(sqrt 2)^2 of the power
    REQUIRE_THAT(capture_efficiency(0, 0, 1.0), WithinAbs(0.9110697462219214, 1e-9));
    REQUIRE_THAT(capture_efficiency(3, 3, 1.5), WithinAbs(0.424603447693, 1e-8));
    REQUIRE_THAT(capture_efficiency(5, 5, 2.2), WithinAbs(0.728828812909, 1e-8));

    // a huge aperture captures everything
    REQUIRE_THAT(capture_efficiency(0, 0, 6.0), WithinAbs(1.0, 1e-10));
    REQUIRE_THAT(capture_efficiency(5, 5, 6.0), WithinAbs(1.0, 1e-10));

    // growing aperture never loses power
    for (int l = 0; l <= 5; ++l)
    {
        REQUIRE(capture_efficiency(l, l, 2.2) > capture_efficiency(l, l, 1.5));
        REQUIRE(capture_efficiency(l, l, 1.5) > capture_efficiency(l, l, 1.0));
    }
}

TEST_CASE("physical-aperture capture matches the scale-free form", "[beam]")
{
    const GaussianBeam beam(0.05, 1e-3);
    const double z = beam.rayleigh_range();
    const double w = beam_radius(beam, z);
    for (int l : {0, 2, 5})
        REQUIRE_THAT(capture_efficiency(beam, l, 1, 1.5 * w, z),
                     WithinRel(capture_efficiency(l, 1, 1.5), 1e-12));
}

TEST_CASE("beam parameter validation", "[beam]")
{
    REQUIRE_THROWS_AS(GaussianBeam(-0.05, 1e-3), std::invalid_argument);
    REQUIRE_THROWS_AS(GaussianBeam(0.05, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(GaussianBeam(0.05, 1e-3, -1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(optimize_waist(0.0, 20.0), std::invalid_argument);
    REQUIRE_THROWS_AS(optimize_waist(1e-3, -5.0), std::invalid_argument);
    REQUIRE_THROWS_AS(capture_efficiency(0, 0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(capture_efficiency(-1, 0, 1.0), std::invalid_argument);
    const GaussianBeam beam(0.05, 1e-3);
    REQUIRE_THROWS_AS(gouy_phase(beam, 70, 0, 1.0), std::domain_error);
    REQUIRE_THROWS_AS(hg_field(beam, 0, 65, 0.0, 0.0, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(mode_grid(-1, 2), std::invalid_argument);
}
