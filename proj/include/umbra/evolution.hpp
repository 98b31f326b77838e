#pragma once

#include "umbra/polynomial.hpp"
#include "umbra/sequence.hpp"
#include "umbra/series.hpp"

namespace umbra {

// Both evaluations of Psi(x, delta) = exp(delta*c*d^2/dx^2) exp(-x^2).
// derivative_route is the returned value; the two routes are independent
// function-family evaluations of the same expansion.
struct GlaisherResult {
    RealEvaluation derivative_route;  // sum_n delta^n c_n/n! H_{2n}(x) e^{-x^2}
    RealEvaluation laguerre_route;    // e^{-x^2} sum_n (-4 delta)^n c_n L_n^{-1/2}(x^2)
    double route_difference = 0.0;

    const RealEvaluation& primary() const { return derivative_route; }
};

// Throws std::runtime_error if both routes converge but disagree beyond
// 10 * opts.tol (relative to max(1, |value|)): that flags a regression in one
// of the special-function families.
GlaisherResult glaisher_evolve(const UmbralSequence& seq, double delta, double x,
                               const SeriesOptions& opts = {});

// Solution of d/dt (t d/dt F) = -d^2/dx^2 F with F(x,0) = g(x):
// F(x,t) = sum_n (-t)^n / (n!)^2 * g^(2n)(x), a finite sum for polynomial g.
// For g = x^m this is the hybrid polynomial LH_m(x, -t). Exact.
BivariatePolynomial pseudo_heat_solve(const Polynomial& g);

// Laguerre derivative -d/dxi (xi d/dxi p), exact.
Polynomial laguerre_derivative(const Polynomial& p);

// d/dt (t dF/dt) + d^2F/dx^2, exact; the zero polynomial iff F solves the
// pseudo-heat equation.
BivariatePolynomial pde_residual(const BivariatePolynomial& f);

}  // namespace umbra
