#pragma once

#include "umbra/sequence.hpp"
#include "umbra/signed_log.hpp"

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace umbra {

inline constexpr int kDefaultMaxTerms = 512;

struct SeriesOptions {
    double tol = 1e-10;
    int max_terms = kDefaultMaxTerms;

    void validate() const {
        if (!(tol > 0.0)) throw std::invalid_argument("SeriesOptions: tol must be positive");
        if (max_terms < 1) throw std::invalid_argument("SeriesOptions: max_terms must be >= 1");
    }
};

// Outcome of a truncated series evaluation. When converged is true,
// tail_estimate <= tol * max(1, |value|) holds by construction of the stop
// rule.
template <class Scalar>
struct SeriesEvaluation {
    Scalar value{};
    int terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
    std::string diagnostic;  // nonempty only when converged is false
};

using RealEvaluation = SeriesEvaluation<double>;
using ComplexEvaluation = SeriesEvaluation<std::complex<double>>;

// Shared truncation engine. Pulls terms from `next_term` (a stateful
// generator is fine; each term is requested exactly once) and stops when
// three consecutive terms satisfy |t| < tol * max(1, |sum|) and the first
// omitted term passes the tail check. tail_estimate = 2 * |first omitted
// term|. Divergence (growing terms past 1e100) and term-budget exhaustion
// are reported through `converged`/`diagnostic`, never thrown.
template <class Scalar, class TermGen>
SeriesEvaluation<Scalar> sum_with_stop_rule(TermGen&& next_term, const SeriesOptions& opts) {
    opts.validate();
    SeriesEvaluation<Scalar> out;

    Scalar sum{};
    Scalar comp{};  // Kahan compensation
    auto accumulate = [&](const Scalar& t) {
        const Scalar y = t - comp;
        const Scalar s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    };

    int small_run = 0;
    double prev_mag = std::numeric_limits<double>::infinity();
    Scalar pending = next_term();
    int added = 0;
    while (true) {
        accumulate(pending);
        ++added;
        const double mag = std::abs(pending);
        const double sum_mag = std::abs(sum);
        if (!std::isfinite(sum_mag)) {
            out.tail_estimate = 2.0 * mag;
            out.diagnostic = "partial sum overflowed";
            break;
        }
        const double scale = std::max(1.0, sum_mag);
        if (mag < opts.tol * scale)
            ++small_run;
        else
            small_run = 0;
        if (mag > 1e100 && mag >= prev_mag) {
            out.tail_estimate = 2.0 * mag;
            out.diagnostic = "series diverging: terms growing without bound";
            break;
        }
        prev_mag = mag;
        if (added >= opts.max_terms) {
            out.tail_estimate = 2.0 * std::abs(next_term());
            out.diagnostic = "term budget exhausted (max_terms = " + std::to_string(opts.max_terms) + ")";
            break;
        }
        pending = next_term();
        if (small_run >= 3) {
            const double tail = 2.0 * std::abs(pending);
            if (tail <= opts.tol * scale) {
                out.converged = true;
                out.tail_estimate = tail;
                break;
            }
        }
    }
    out.value = sum;
    out.terms_used = added;
    return out;
}

// f(x) = sum_n c_n x^n / n!, the pseudo-exponential realization of the
// sequence. Terms are assembled in log scale.
RealEvaluation eval_pseudo_exp(const UmbralSequence& seq, double x, const SeriesOptions& opts = {});
ComplexEvaluation eval_pseudo_exp(const UmbralSequence& seq, std::complex<double> z,
                                  const SeriesOptions& opts = {});

// q(z) = sum_n c_n z^n (no factorial weights); the projective action's radial
// series. May legitimately diverge; see sum_with_stop_rule.
RealEvaluation eval_power_series(const UmbralSequence& seq, double z, const SeriesOptions& opts = {});

// sum_k a_k c_k: umbral evaluation of a polynomial in the umbral symbol.
double umbral_eval(std::span<const double> coeffs, const UmbralSequence& seq);

}  // namespace umbra
