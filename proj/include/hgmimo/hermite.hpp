// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_HERMITE_HPP
#define HGMIMO_HERMITE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hgmimo/quadrature.hpp"

namespace hgmimo {

// Orders above this overflow the recurrence long before any physically
// meaningful beam uses them.
inline constexpr int hermite_order_cap = 64;

namespace detail {

inline void check_hermite_order(int n)
{
    if (n < 0)
        throw std::invalid_argument("hermite: order must be >= 0");
    if (n > hermite_order_cap)
        throw std::domain_error("hermite: order exceeds supported cap of 64");
}

} // namespace detail

// Physicists' Hermite polynomial H_n(x) via the three-term recurrence
// H_{n+1} = 2 x H_n - 2 n H_{n-1}.
inline double hermite_eval(int n, double x)
{
    detail::check_hermite_order(n);
    double hm1 = 0.0, h = 1.0;
    for (int k = 0; k < n; ++k)
    {
        const double hp1 = 2.0 * x * h - 2.0 * k * hm1;
        hm1 = h;
        h = hp1;
    }
    return h;
}

// H_0(x) .. H_n(x) in one recurrence pass.
inline std::vector<double> hermite_sequence(int n, double x)
{
    detail::check_hermite_order(n);
    std::vector<double> vals(static_cast<std::size_t>(n) + 1);
    vals[0] = 1.0;
    if (n >= 1)
        vals[1] = 2.0 * x;
    for (int k = 1; k < n; ++k)
        vals[k + 1] = 2.0 * x * vals[k] - 2.0 * k * vals[k - 1];
    return vals;
}

// Checks the weighted orthogonality integral
//   int H_m(x) H_n(x) exp(-x^2) dx = sqrt(pi) 2^n n! delta_mn
// for all m, n <= max_n by Gauss-Hermite quadrature. Returns the largest
// absolute deviation of the normalized Gram matrix from the identity.
inline double hermite_orthogonality_check(int max_n)
{
    detail::check_hermite_order(max_n);
    const int n_nodes = 2 * max_n + 16; // exactness needs only max_n + 1
    const QuadRule rule = gauss_hermite(n_nodes);

    const int n_funcs = max_n + 1;
    std::vector<double> gram(static_cast<std::size_t>(n_funcs) * n_funcs, 0.0);
    for (int i = 0; i < n_nodes; ++i)
    {
        const std::vector<double> h = hermite_sequence(max_n, rule.x[i]);
        for (int m = 0; m < n_funcs; ++m)
            for (int n = 0; n < n_funcs; ++n)
                gram[static_cast<std::size_t>(m) * n_funcs + n] += rule.w[i] * h[m] * h[n];
    }

    // norm_n = sqrt(pi) 2^n n!
    std::vector<double> norm(n_funcs);
    norm[0] = std::sqrt(arma::datum::pi);
    for (int n = 1; n < n_funcs; ++n)
        norm[n] = norm[n - 1] * 2.0 * n;

    double worst = 0.0;
    for (int m = 0; m < n_funcs; ++m)
        for (int n = 0; n < n_funcs; ++n)
        {
            const double g = gram[static_cast<std::size_t>(m) * n_funcs + n] / std::sqrt(norm[m] * norm[n]);
            const double err = std::abs(g - (m == n ? 1.0 : 0.0));
            worst = std::max(worst, err);
        }
    return worst;
}

} // namespace hgmimo

#endif // HGMIMO_HERMITE_HPP
