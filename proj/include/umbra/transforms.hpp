#pragma once

#include "umbra/sequence.hpp"
#include "umbra/series.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace umbra {

// Nodes and weights for the weight s^alpha e^{-s} on [0, inf), by
// Golub-Welsch on the Jacobi matrix of the associated Laguerre recurrence.
// Weights are normalized to unit total mass (the 1/Gamma(alpha+1) of the
// integral identities is folded in).
struct GaussLaguerreRule {
    GaussLaguerreRule(int order, double alpha);
    std::vector<double> nodes;
    std::vector<double> weights;
};

struct QuadratureSpec {
    enum class Scheme { gauss_laguerre, adaptive_trapezoid };

    Scheme scheme = Scheme::gauss_laguerre;
    int order = 64;           // gauss_laguerre
    double lower = -8.5;      // adaptive_trapezoid bounds
    double upper = 8.5;
    int max_refinements = 14;
    double tol = 1e-10;

    static QuadratureSpec gauss_laguerre(int order = 64, double tol = 1e-10);
    static QuadratureSpec adaptive_trapezoid(double lower, double upper, int max_refinements = 14,
                                             double tol = 1e-10);
    void validate() const;
};

// A dual-route transform evaluation. `series` is absent when the sequence
// family admits no closed series route. value() prefers the series route.
struct TransformResult {
    std::optional<RealEvaluation> series;
    RealEvaluation quadrature;
    double abs_diff = 0.0;  // |series - quadrature| when both are present

    const RealEvaluation& value() const { return series ? *series : quadrature; }
};

// (1 + c x)^(-nu) evaluated umbrally (nu > 0, x >= 0):
//   quadrature route: (1/Gamma(nu)) int_0^inf e^{-s} f(-s x) s^(nu-1) ds
//     with f = eval_pseudo_exp, by generalized Gauss-Laguerre (alpha = nu-1);
//   series route (inverse_shifted_factorial family only):
//     (1/Gamma(nu)) sum_k (-1)^k x^k Gamma(k+nu) / (k! (m k + p_eff)!).
// Throws std::runtime_error if both routes converge but disagree beyond
// 10 * q.tol.
TransformResult umbral_laplace(const UmbralSequence& seq, double nu, double x,
                               const QuadratureSpec& q);

// F(c x) for F given by Taylor coefficients around 0 and its Fourier
// transform f_tilde (unitary convention):
//   direct route: sum_n f_n c_n x^n;
//   quadrature route: (1/sqrt(2 pi)) int f_tilde(k) f(i k x) dk on
//     [q.lower, q.upper] by refined trapezoid.
// The integrand magnitude is monitored; values past 1e6 abort with
// std::runtime_error (outside the transform's usable domain).
TransformResult umbral_fourier(std::span<const double> f_coeffs,
                               const std::function<double(double)>& f_tilde,
                               const UmbralSequence& seq, double x, const QuadratureSpec& q);

// Taylor coefficients of exp(-x^2/2) around 0 (the built-in test instance).
std::vector<double> gaussian_taylor_coeffs(int count);
// Its Fourier transform in the unitary convention: exp(-k^2/2).
double gaussian_fourier_transform(double k);

}  // namespace umbra
