// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hgmimo/geometry.hpp"
#include "hgmimo/units.hpp"

using namespace hgmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

void require_close(const Vec3 &v, double x, double y, double z, double tol = 1e-15)
{
    REQUIRE_THAT(v.x, WithinAbs(x, tol));
    REQUIRE_THAT(v.y, WithinAbs(y, tol));
    REQUIRE_THAT(v.z, WithinAbs(z, tol));
}

} // namespace

TEST_CASE("element_positions covers the grid in x-major order", "[geometry]")
{
    const PlanarArray array(1, 1, 2.0, 5.0);
    REQUIRE(array.size() == 9);
    REQUIRE(array.count_x() == 3);

    const auto pts = element_positions(array);
    require_close(pts[0], -2.0, -2.0, 5.0);
    require_close(pts[1], -2.0, 0.0, 5.0); // y runs fastest
    require_close(pts[2], -2.0, 2.0, 5.0);
    require_close(pts[3], 0.0, -2.0, 5.0);
    require_close(pts[8], 2.0, 2.0, 5.0);
}

TEST_CASE("71x71 panel dimensions", "[geometry]")
{
    const PlanarArray array(35, 35, 0.005, -10.0);
    const auto pts = element_positions(array);
    REQUIRE(pts.size() == 5041);

    double max_x = 0.0;
    for (const Vec3 &p : pts)
    {
        max_x = std::max(max_x, std::abs(p.x));
        REQUIRE(p.z == -10.0);
    }
    REQUIRE_THAT(max_x, WithinRel(0.175, 1e-12));
}

TEST_CASE("rotation maps the canonical axes as an active rotation", "[geometry]")
{
    // x tilt of 90 deg lifts +y onto +z
    require_close(rotate({deg_to_rad(90.0), 0.0}, {0, 1, 0}), 0.0, 0.0, 1.0, 1e-15);
    // y tilt of 90 deg brings +z onto +x
    require_close(rotate({0.0, deg_to_rad(90.0)}, {0, 0, 1}), 1.0, 0.0, 0.0, 1e-15);
    // composed: x tilt first, then y tilt, so +y lands on +x
    require_close(rotate({deg_to_rad(90.0), deg_to_rad(90.0)}, {0, 1, 0}), 1.0, 0.0, 0.0, 1e-15);

    // y tilt of 30 deg swings a point on the x axis down in z
    const Vec3 p = rotate({0.0, deg_to_rad(30.0)}, {0.005, 0, 0});
    require_close(p, 0.005 * std::cos(deg_to_rad(30.0)), 0.0, -0.005 * std::sin(deg_to_rad(30.0)), 1e-18);
}

TEST_CASE("rotation preserves lengths and zero tilt is the identity", "[geometry]")
{
    const Vec3 v{0.3, -1.2, 2.1};
    REQUIRE_THAT(norm(rotate({0.35, -0.8}, v)), WithinRel(norm(v), 1e-14));
    require_close(rotate({0.0, 0.0}, v), v.x, v.y, v.z);
}

TEST_CASE("steering pivots the panel about its own center", "[geometry]")
{
    const PlanarArray array(6, 4, 0.01, -10.0);
    const Tilt tilt{deg_to_rad(20.0), deg_to_rad(35.0)};

    const auto flat = element_positions(array);
    const auto steered = steered_sample_points(array, tilt);
    REQUIRE(steered.size() == flat.size());

    // center element stays put
    const std::size_t mid = flat.size() / 2;
    require_close(flat[mid], 0.0, 0.0, -10.0);
    require_close(steered[mid], 0.0, 0.0, -10.0, 1e-12);

    // rigid motion: all pairwise distances survive
    for (std::size_t i = 0; i < flat.size(); i += 17)
        for (std::size_t j = i + 1; j < flat.size(); j += 29)
            REQUIRE_THAT(norm(steered[i] - steered[j]), WithinRel(norm(flat[i] - flat[j]), 1e-12));
}

TEST_CASE("steered points of a tilted panel at z = -10", "[geometry]")
{
    const PlanarArray array(2, 2, 0.005, -10.0);
    const double th = deg_to_rad(30.0);
    const auto pts = steered_sample_points(array, {0.0, th});

    // (x, 0, -10) -> (x cos, 0, -10 - x sin)
    const double x = 2 * 0.005;
    bool found = false;
    for (const Vec3 &p : pts)
        if (std::abs(p.x - x * std::cos(th)) < 1e-15 && std::abs(p.y) < 1e-15)
        {
            REQUIRE_THAT(p.z, WithinRel(-10.0 - x * std::sin(th), 1e-12));
            found = true;
        }
    REQUIRE(found);
}

TEST_CASE("panel frames tilt with the panel", "[geometry]")
{
    const PanelFrame tx = tx_frame();
    require_close(tx.boresight, 0.0, 0.0, 1.0);
    const PanelFrame rx = rx_frame();
    require_close(rx.boresight, 0.0, 0.0, -1.0);
    // right-handed: right x up = boresight
    require_close({tx.right.y * tx.up.z - tx.right.z * tx.up.y,
                   tx.right.z * tx.up.x - tx.right.x * tx.up.z,
                   tx.right.x * tx.up.y - tx.right.y * tx.up.x},
                  tx.boresight.x, tx.boresight.y, tx.boresight.z);

    const double th = deg_to_rad(30.0);
    const PanelFrame steered = steered_frame(tx, {0.0, th});
    require_close(steered.boresight, std::sin(th), 0.0, std::cos(th), 1e-15);
    require_close(steered.up, 0.0, 1.0, 0.0, 1e-15);
}

TEST_CASE("array parameter validation", "[geometry]")
{
    REQUIRE_THROWS_AS(PlanarArray(-1, 3, 0.01, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(PlanarArray(3, 3, 0.0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(PlanarArray(3, 3, -0.01, 0.0), std::invalid_argument);
}
