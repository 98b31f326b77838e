#include "umbra/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace umbra {

RealEvaluation tricomi_c(int n, double x, const SeriesOptions& opts) {
    if (n < 0) throw std::invalid_argument("tricomi_c: order must be nonnegative");
    if (!std::isfinite(x)) throw std::invalid_argument("tricomi_c: x must be finite");
    // t_0 = 1/n!, t_{k+1} = t_k * (-x) / ((n+k+1)(k+1)); carried in log scale.
    SignedLog t{1, -log_factorial(n)};
    long k = 0;
    auto gen = [&]() -> double {
        if (k == 0) {
            ++k;
            return t.value();
        }
        if (x == 0.0 || t.sign == 0) {
            ++k;
            return 0.0;
        }
        t.sign *= (x > 0.0 ? -1 : 1);
        t.log_mag += std::log(std::abs(x)) - std::log(static_cast<double>(n) + k) -
                     std::log(static_cast<double>(k));
        ++k;
        return t.value();
    };
    return sum_with_stop_rule<double>(gen, opts);
}

double hermite_two_var(int n, double x, double y) {
    if (n < 0) throw std::invalid_argument("hermite_two_var: n must be nonnegative");
    // term_k = n!/((n-2k)! k!) * x^(n-2k) * y^k; the multinomial factor is
    // integral, kept exact by incremental integer-ratio updates.
    double mult = 1.0;  // n!/((n-2k)! k!) at k = 0
    double sum = 0.0;
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0) mult *= static_cast<double>(n - 2 * k + 2) * (n - 2 * k + 1) / k;
        sum += mult * std::pow(x, n - 2 * k) * std::pow(y, k);
    }
    return sum;
}

double LaguerreHalfSeq::next() {
    constexpr double alpha = -0.5;
    double out;
    if (k_ == 0) {
        out = 1.0;
    } else if (k_ == 1) {
        out = 1.0 + alpha - z_;
    } else {
        const double km1 = static_cast<double>(k_ - 1);
        out = ((2.0 * km1 + 1.0 + alpha - z_) * curr_ - (km1 + alpha) * prev_) / (km1 + 1.0);
    }
    prev_ = curr_;
    curr_ = out;
    ++k_;
    return out;
}

double laguerre_half(int n, double z) {
    if (n < 0) throw std::invalid_argument("laguerre_half: n must be nonnegative");
    LaguerreHalfSeq seq(z);
    double v = 0.0;
    for (int k = 0; k <= n; ++k) v = seq.next();
    return v;
}

double hybrid_lh(int m, double xi, double tau) {
    if (m < 0) throw std::invalid_argument("hybrid_lh: m must be nonnegative");
    // m!/((k!)^2 (m-2k)!) updated incrementally; exact for small integers.
    double mult = 1.0;
    double sum = 0.0;
    for (int k = 0; 2 * k <= m; ++k) {
        if (k > 0) mult *= static_cast<double>(m - 2 * k + 2) * (m - 2 * k + 1) / (static_cast<double>(k) * k);
        sum += mult * std::pow(xi, m - 2 * k) * std::pow(tau, k);
    }
    return sum;
}

BivariatePolynomial hybrid_lh_poly(int m) {
    if (m < 0) throw std::invalid_argument("hybrid_lh_poly: m must be nonnegative");
    BivariatePolynomial out;
    const Integer mfact = int_factorial(m);
    for (int k = 0; 2 * k <= m; ++k) {
        const Integer kf = int_factorial(k);
        Rational c(mfact, kf * kf * int_factorial(m - 2 * k));
        out.add_term(m - 2 * k, k, c);
    }
    return out;
}

SignedLog HermitePhysSeq::next() {
    double out;
    if (k_ == 0) {
        out = 1.0;
    } else if (k_ == 1) {
        out = 2.0 * x_;
    } else {
        out = 2.0 * x_ * curr_ - 2.0 * static_cast<double>(k_ - 1) * prev_;
    }
    const SignedLog emitted = (out == 0.0)
                                  ? SignedLog::zero()
                                  : SignedLog{out > 0.0 ? 1 : -1, std::log(std::abs(out)) + log_scale_};
    prev_ = curr_;
    curr_ = out;
    ++k_;
    if (std::abs(curr_) > 1e150 || std::abs(prev_) > 1e150) {
        constexpr double down = 1e-150;
        curr_ *= down;
        prev_ *= down;
        log_scale_ += 150.0 * std::log(10.0);
    }
    return emitted;
}

double hermite_phys(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_phys: n must be nonnegative");
    HermitePhysSeq seq(x);
    SignedLog v;
    for (int k = 0; k <= n; ++k) v = seq.next();
    return v.value();
}

}  // namespace umbra
