// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_QUADRATURE_HPP
#define HGMIMO_QUADRATURE_HPP

#include <armadillo>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hgmimo {

// Nodes and weights of an n-point quadrature rule, nodes ascending.
struct QuadRule
{
    std::vector<double> x;
    std::vector<double> w;
};

namespace detail {

// Golub-Welsch: nodes are the eigenvalues of the symmetric Jacobi matrix of
// the orthogonal-polynomial recurrence, weights are mu0 times the squared
// first components of the normalized eigenvectors. offdiag[k] holds beta_{k+1}.
inline QuadRule golub_welsch(const arma::vec &offdiag, double mu0)
{
    const arma::uword n = offdiag.n_elem + 1;
    arma::mat J(n, n, arma::fill::zeros);
    for (arma::uword k = 0; k + 1 < n; ++k)
    {
        J(k, k + 1) = offdiag(k);
        J(k + 1, k) = offdiag(k);
    }

    arma::vec eigval;
    arma::mat eigvec;
    if (!arma::eig_sym(eigval, eigvec, J))
        throw std::runtime_error("quadrature: Jacobi matrix eigendecomposition failed");

    QuadRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (arma::uword i = 0; i < n; ++i)
    {
        rule.x[i] = eigval(i); // eig_sym returns ascending order
        rule.w[i] = mu0 * eigvec(0, i) * eigvec(0, i);
    }
    return rule;
}

} // namespace detail

// n-point Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n-1.
inline QuadRule gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: n must be >= 1");
    if (n == 1)
        return QuadRule{{0.0}, {2.0}};

    arma::vec beta(n - 1);
    for (int k = 1; k < n; ++k)
        beta(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    return detail::golub_welsch(beta, 2.0);
}

// n-point Gauss-Hermite rule for weight exp(-x^2) on (-inf, inf).
inline QuadRule gauss_hermite(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_hermite: n must be >= 1");
    const double mu0 = std::sqrt(arma::datum::pi);
    if (n == 1)
        return QuadRule{{0.0}, {mu0}};

    arma::vec beta(n - 1);
    for (int k = 1; k < n; ++k)
        beta(k - 1) = std::sqrt(0.5 * k);
    return detail::golub_welsch(beta, mu0);
}

// Gauss-Legendre rule mapped from [-1, 1] onto [a, b].
inline QuadRule gauss_legendre(int n, double a, double b)
{
    if (!(a < b))
        throw std::invalid_argument("gauss_legendre: interval must satisfy a < b");
    QuadRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i)
    {
        rule.x[i] = mid + half * rule.x[i];
        rule.w[i] *= half;
    }
    return rule;
}

} // namespace hgmimo

#endif // HGMIMO_QUADRATURE_HPP
