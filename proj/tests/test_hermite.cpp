// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hgmimo/hermite.hpp"

using namespace hgmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("hermite_eval matches closed forms", "[hermite]")
{
    // H_0 = 1, H_1 = 2x, H_2 = 4x^2 - 2, H_3 = 8x^3 - 12x,
    // H_5 = 32x^5 - 160x^3 + 120x
    REQUIRE(hermite_eval(0, 3.7) == 1.0);
    REQUIRE_THAT(hermite_eval(1, 0.7), WithinRel(1.4, 1e-15));
    REQUIRE_THAT(hermite_eval(2, 0.0), WithinRel(-2.0, 1e-15));
    REQUIRE_THAT(hermite_eval(3, 1.0), WithinRel(-4.0, 1e-14));
    REQUIRE_THAT(hermite_eval(5, -0.3), WithinRel(-31.75776, 1e-13));
    REQUIRE_THAT(hermite_eval(10, 2.2), WithinRel(350419.82826741785, 1e-12));
}

TEST_CASE("hermite_sequence agrees with hermite_eval", "[hermite]")
{
    for (double x : {-2.1, -0.4, 0.0, 0.9, 3.3})
    {
        const std::vector<double> seq = hermite_sequence(12, x);
        REQUIRE(seq.size() == 13);
        for (int n = 0; n <= 12; ++n)
            REQUIRE_THAT(seq[n], WithinRel(hermite_eval(n, x), 1e-13) || WithinAbs(hermite_eval(n, x), 1e-13));
    }
}

TEST_CASE("hermite recurrence and parity", "[hermite]")
{
    for (double x : {-1.7, 0.25, 1.0, 2.6})
        for (int n = 1; n <= 15; ++n)
        {
            const double lhs = hermite_eval(n + 1, x);
            const double rhs = 2.0 * x * hermite_eval(n, x) - 2.0 * n * hermite_eval(n - 1, x);
            REQUIRE_THAT(lhs, WithinRel(rhs, 1e-12) || WithinAbs(rhs, 1e-10));

            // H_n(-x) = (-1)^n H_n(x)
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            REQUIRE_THAT(hermite_eval(n, -x), WithinRel(sign * hermite_eval(n, x), 1e-13) ||
                                                  WithinAbs(sign * hermite_eval(n, x), 1e-13));
        }
}

TEST_CASE("weighted orthogonality holds to 1e-9 through order 10", "[hermite]")
{
    REQUIRE(hermite_orthogonality_check(10) < 1e-9);
}

TEST_CASE("orthogonality check stays finite at the order cap", "[hermite]")
{
    REQUIRE(std::isfinite(hermite_orthogonality_check(20)));
    REQUIRE(std::isfinite(hermite_eval(hermite_order_cap, 1.5)));
}

TEST_CASE("hermite order validation", "[hermite]")
{
    REQUIRE_THROWS_AS(hermite_eval(-1, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(hermite_eval(hermite_order_cap + 1, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(hermite_sequence(-2, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(hermite_orthogonality_check(65), std::domain_error);
}
