#include "umbra/operator_actions.hpp"

#include <cmath>

namespace umbra {

Polynomial umbral_shift_poly(const UmbralSequence& seq, const Polynomial& g, double lambda) {
    if (g.is_zero()) return g;
    const Rational lam = rational_from_double(lambda);
    const int d = g.degree();
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));

    // powers of lambda and the sequence moments, once each
    std::vector<Rational> lam_pow(static_cast<std::size_t>(d) + 1);
    std::vector<Rational> moments(static_cast<std::size_t>(d) + 1);
    lam_pow[0] = 1;
    for (int k = 1; k <= d; ++k) lam_pow[static_cast<std::size_t>(k)] = lam_pow[static_cast<std::size_t>(k - 1)] * lam;
    for (int k = 0; k <= d; ++k) moments[static_cast<std::size_t>(k)] = seq.exact_coefficient(k);

    for (int n = 0; n <= d; ++n) {
        const Rational an = g.coeff(n);
        if (an == 0) continue;
        for (int k = 0; k <= n; ++k) {
            out[static_cast<std::size_t>(n - k)] +=
                an * Rational(int_binomial(n, k)) * lam_pow[static_cast<std::size_t>(k)] *
                moments[static_cast<std::size_t>(k)];
        }
    }
    return Polynomial(std::move(out), g.label());
}

RealEvaluation dilation_action(const UmbralSequence& seq, double lambda, const SeriesOptions& opts) {
    return eval_pseudo_exp(seq, lambda, opts);
}

RealEvaluation projective_action(const UmbralSequence& seq, double lambda, double x,
                                 const SeriesOptions& opts) {
    RealEvaluation q = eval_power_series(seq, lambda * x, opts);
    q.value *= x;
    q.tail_estimate *= std::abs(x);
    return q;
}

RealEvaluation phi_n(const UmbralSequence& seq, int n, double x, const SeriesOptions& opts) {
    if (n < 0) throw std::invalid_argument("phi_n: n must be nonnegative");
    return eval_pseudo_exp(seq.shifted(n), x, opts);
}

RealEvaluation addition_decomposition(const UmbralSequence& seq, double x, double y, int n_outer,
                                      const SeriesOptions& opts) {
    opts.validate();
    if (n_outer < 1 || n_outer > opts.max_terms)
        throw std::invalid_argument("addition_decomposition: N must be in [1, max_terms]");

    const bool y_zero = (y == 0.0);
    const double log_abs_y = y_zero ? 0.0 : std::log(std::abs(y));

    RealEvaluation out;
    out.converged = true;
    double sum = 0.0, comp = 0.0;
    double last_outer = 0.0;
    for (int n = 0; n <= n_outer; ++n) {
        if (y_zero && n > 0) break;
        const RealEvaluation inner = phi_n(seq, n, x, opts);
        out.terms_used = n + 1;  // outer terms; inner counts are tol-driven
        if (!inner.converged) {
            out.converged = false;
            out.diagnostic = "phi_" + std::to_string(n) + " did not converge: " + inner.diagnostic;
        }
        double weight = n == 0 ? 1.0 : std::exp(n * log_abs_y - log_factorial(n));
        if (y < 0.0 && (n & 1)) weight = -weight;
        const double t = weight * inner.value;
        last_outer = t;
        const double u = t - comp;
        const double s = sum + u;
        comp = (s - sum) - u;
        sum = s;
    }
    out.value = sum;
    // outer truncation gauged by the last outer term, per the module contract
    out.tail_estimate = std::abs(last_outer);
    return out;
}

}  // namespace umbra
