#pragma once

#include <cmath>
#include <limits>

namespace umbra {

// Sign + natural-log-of-magnitude representation. Factorials overflow double
// at 171!, so coefficients and series terms are carried in log scale and
// converted to plain doubles only when combined.
struct SignedLog {
    int sign = 0;  // -1, 0, +1
    double log_mag = -std::numeric_limits<double>::infinity();

    static SignedLog zero() { return {}; }
    static SignedLog one() { return {1, 0.0}; }

    static SignedLog from_value(double v) {
        if (v == 0.0) return zero();
        return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
    }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_mag);
    }

    SignedLog operator*(const SignedLog& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {sign * o.sign, log_mag + o.log_mag};
    }
};

// log(n!) without overflow.
inline double log_factorial(long n) {
    return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace umbra
