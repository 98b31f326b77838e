#include "umbra/series.hpp"

namespace umbra {

namespace {

// Term generator for sum_n c_n z^n w_n with w_n = 1/n! (pseudo-exponential)
// or w_n = 1 (plain power series), real argument.
struct RealTerms {
    const UmbralSequence& seq;
    double log_abs_z;
    bool z_negative;
    bool z_zero;
    bool factorial_weights;
    long n = 0;

    double operator()() {
        const long i = n++;
        if (z_zero && i > 0) return 0.0;
        const SignedLog c = seq.coefficient(i);
        if (c.sign == 0) return 0.0;
        double lm = c.log_mag;
        if (i > 0) lm += static_cast<double>(i) * log_abs_z;
        if (factorial_weights) lm -= log_factorial(i);
        const int s = c.sign * ((z_negative && (i & 1)) ? -1 : 1);
        return s * std::exp(lm);
    }
};

struct ComplexTerms {
    const UmbralSequence& seq;
    double log_abs_z;
    double arg_z;
    bool z_zero;
    long n = 0;

    std::complex<double> operator()() {
        const long i = n++;
        if (z_zero && i > 0) return {0.0, 0.0};
        const SignedLog c = seq.coefficient(i);
        if (c.sign == 0) return {0.0, 0.0};
        double lm = c.log_mag - log_factorial(i);
        if (i > 0) lm += static_cast<double>(i) * log_abs_z;
        return std::polar(c.sign * std::exp(lm), static_cast<double>(i) * arg_z);
    }
};

}  // namespace

RealEvaluation eval_pseudo_exp(const UmbralSequence& seq, double x, const SeriesOptions& opts) {
    if (!std::isfinite(x)) throw std::invalid_argument("eval_pseudo_exp: x must be finite");
    RealTerms gen{seq, x == 0.0 ? 0.0 : std::log(std::abs(x)), x < 0.0, x == 0.0, true};
    return sum_with_stop_rule<double>(gen, opts);
}

ComplexEvaluation eval_pseudo_exp(const UmbralSequence& seq, std::complex<double> z,
                                  const SeriesOptions& opts) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("eval_pseudo_exp: z must be finite");
    const double r = std::abs(z);
    ComplexTerms gen{seq, r == 0.0 ? 0.0 : std::log(r), std::arg(z), r == 0.0};
    return sum_with_stop_rule<std::complex<double>>(gen, opts);
}

RealEvaluation eval_power_series(const UmbralSequence& seq, double z, const SeriesOptions& opts) {
    if (!std::isfinite(z)) throw std::invalid_argument("eval_power_series: z must be finite");
    RealTerms gen{seq, z == 0.0 ? 0.0 : std::log(std::abs(z)), z < 0.0, z == 0.0, false};
    return sum_with_stop_rule<double>(gen, opts);
}

double umbral_eval(std::span<const double> coeffs, const UmbralSequence& seq) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0.0) continue;
        const SignedLog c = seq.coefficient(static_cast<long>(k));
        if (c.sign == 0) continue;
        const double t = coeffs[k] * c.sign * std::exp(c.log_mag);
        const double y = t - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

}  // namespace umbra
