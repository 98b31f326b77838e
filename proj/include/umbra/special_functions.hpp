#pragma once

#include "umbra/polynomial.hpp"
#include "umbra/series.hpp"
#include "umbra/signed_log.hpp"

namespace umbra {

// Bessel-Tricomi function C_n(x) = sum_k (-x)^k / ((n+k)! k!).
// C_0(x) = J0(2 sqrt(x)) for x >= 0.
RealEvaluation tricomi_c(int n, double x, const SeriesOptions& opts = {});

// Two-variable Hermite polynomial
// H_n(x,y) = n! sum_{k<=n/2} x^(n-2k) y^k / ((n-2k)! k!).
double hermite_two_var(int n, double x, double y);

// Associated Laguerre polynomial with parameter alpha = -1/2, standard
// normalization L_n^a(0) = C(n+a, n), by the three-term recurrence.
double laguerre_half(int n, double z);

// Incremental generator of L_0^(-1/2)(z), L_1^(-1/2)(z), ... for series that
// consume the whole family in order.
class LaguerreHalfSeq {
public:
    explicit LaguerreHalfSeq(double z) : z_(z) {}
    double next();

private:
    double z_;
    long k_ = 0;
    double prev_ = 0.0;  // L_{k-2}
    double curr_ = 0.0;  // L_{k-1}
};

// Hybrid polynomial LH_m(xi, tau) = m! sum_{k<=m/2} tau^k xi^(m-2k) /
// ((k!)^2 (m-2k)!). The tau exponent is k: the operator expansion
// sum_n tau^n/(n!)^2 d^{2n}/dxi^{2n} xi^m forces it (verified against the
// exact-coefficient route below).
double hybrid_lh(int m, double xi, double tau);

// Exact coefficients of LH_m as a bivariate polynomial in (xi, tau).
BivariatePolynomial hybrid_lh_poly(int m);

// Physicists' Hermite polynomial H_n(x) (H_{n+1} = 2x H_n - 2n H_{n-1}).
double hermite_phys(int n, double x);

// Log-scaled generator of H_0(x), H_1(x), ...; the recurrence is rescaled
// internally so orders past the double overflow point stay usable.
class HermitePhysSeq {
public:
    explicit HermitePhysSeq(double x) : x_(x) {}
    SignedLog next();

private:
    double x_;
    long k_ = 0;
    double prev_ = 0.0;       // scaled H_{k-2}
    double curr_ = 0.0;       // scaled H_{k-1}
    double log_scale_ = 0.0;  // accumulated rescaling, in logs
};

}  // namespace umbra
