#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace umbra {

// Exact arbitrary-precision rational. Zero-residual PDE checks and the
// operator-action polynomials are stated exactly, so coefficients must not
// round.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer f = 1;
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Integer int_binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (long j = 0; j < k; ++j) {
        b *= (n - j);
        b /= (j + 1);
    }
    return b;
}

// Doubles are dyadic rationals, so this conversion is exact.
inline Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("cannot convert non-finite double to rational");
    return Rational(v);
}

inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

}  // namespace umbra
