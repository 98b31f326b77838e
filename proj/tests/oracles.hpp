#pragma once

// Independent oracles used by the test suites. Everything here is kept apart
// from the implementation paths it checks: plain quadrature, explicit sums,
// and dense linear algebra only.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

// J_nu by the integral representation J_n(z) = (1/pi) int_0^pi
// cos(n t - z sin t) dt, composite trapezoid. The integrand extends to a
// smooth 2pi-periodic function, so the rule converges spectrally; 4096
// panels is far past machine precision for |z| <= 12.
inline double bessel_j(int n, double z, int panels = 4096) {
    const double h = std::numbers::pi / panels;
    double sum = 0.5 * (std::cos(0.0) + std::cos(n * std::numbers::pi - z * std::sin(std::numbers::pi)));
    for (int i = 1; i < panels; ++i) {
        const double t = i * h;
        sum += std::cos(n * t - z * std::sin(t));
    }
    return sum * h / std::numbers::pi;
}

// The acceptance-criterion form: (1/pi) int_0^pi cos(2 sqrt(lambda) sin t) dt
// = J_0(2 sqrt(lambda)).
inline double tricomi_c0(double lambda, int panels = 4096) {
    return bessel_j(0, 2.0 * std::sqrt(lambda), panels);
}

// Associated Laguerre polynomial by the explicit hypergeometric sum
// L_n^a(z) = sum_k binom(n+a, n-k) (-z)^k / k!, for a > -1 so every gamma
// factor is positive.
inline double laguerre_sum(int n, double alpha, double z) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double logc = std::lgamma(n + alpha + 1.0) - std::lgamma(n - k + 1.0) -
                            std::lgamma(alpha + k + 1.0) - std::lgamma(k + 1.0);
        double term = std::exp(logc) * std::pow(z, k);
        if (k % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double b = 1.0;
    for (int j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
    return b;
}

}  // namespace oracle
