#include "umbra/evolution.hpp"

#include "umbra/special_functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace umbra {

GlaisherResult glaisher_evolve(const UmbralSequence& seq, double delta, double x,
                               const SeriesOptions& opts) {
    opts.validate();
    if (!std::isfinite(delta) || !std::isfinite(x))
        throw std::invalid_argument("glaisher_evolve: delta and x must be finite");

    const bool d_zero = (delta == 0.0);
    const double log_abs_d = d_zero ? 0.0 : std::log(std::abs(delta));
    const double gauss_log = -x * x;  // log of exp(-x^2)

    // route (a): sum_n delta^n c_n / n! * H_{2n}(x) * e^{-x^2}
    GlaisherResult out;
    {
        HermitePhysSeq hermites(x);
        SignedLog h = hermites.next();  // H_0
        long n = 0;
        auto gen = [&]() -> double {
            if (n > 0) {
                hermites.next();       // H_{2n-1}, unused
                h = hermites.next();   // H_{2n}
            }
            const long i = n++;
            if (d_zero && i > 0) return 0.0;
            const SignedLog c = seq.coefficient(i);
            if (c.sign == 0 || h.sign == 0) return 0.0;
            double lm = c.log_mag - log_factorial(i) + h.log_mag + gauss_log;
            if (i > 0) lm += static_cast<double>(i) * log_abs_d;
            const int s = c.sign * h.sign * ((delta < 0.0 && (i & 1)) ? -1 : 1);
            return s * std::exp(lm);
        };
        out.derivative_route = sum_with_stop_rule<double>(gen, opts);
    }

    // route (b): e^{-x^2} * sum_n (-4 delta)^n c_n L_n^{-1/2}(x^2)
    {
        LaguerreHalfSeq laguerres(x * x);
        const double log_4d = d_zero ? 0.0 : std::log(4.0 * std::abs(delta));
        long n = 0;
        auto gen = [&]() -> double {
            const double ln = laguerres.next();
            const long i = n++;
            if (d_zero && i > 0) return 0.0;
            const SignedLog c = seq.coefficient(i);
            if (c.sign == 0 || ln == 0.0) return 0.0;
            double lm = c.log_mag + std::log(std::abs(ln)) + gauss_log;
            if (i > 0) lm += static_cast<double>(i) * log_4d;
            int s = c.sign * (ln > 0.0 ? 1 : -1);
            if ((i & 1) && delta > 0.0) s = -s;  // sign of (-4 delta)^n
            return s * std::exp(lm);
        };
        out.laguerre_route = sum_with_stop_rule<double>(gen, opts);
    }

    out.route_difference = std::abs(out.derivative_route.value - out.laguerre_route.value);
    if (out.derivative_route.converged && out.laguerre_route.converged) {
        const double scale = std::max(1.0, std::abs(out.derivative_route.value));
        if (out.route_difference > 10.0 * opts.tol * scale) {
            std::ostringstream os;
            os << "glaisher_evolve: route disagreement " << out.route_difference
               << " exceeds 10*tol at delta=" << delta << " x=" << x;
            throw std::runtime_error(os.str());
        }
    }
    return out;
}

BivariatePolynomial pseudo_heat_solve(const Polynomial& g) {
    BivariatePolynomial f;
    Polynomial d = g;  // g^(2n)
    Rational coeff(1);  // (-1)^n / (n!)^2
    for (int n = 0; !d.is_zero(); ++n) {
        if (n > 0) {
            d = d.derivative().derivative();
            coeff = -coeff / (static_cast<long>(n) * n);
            if (d.is_zero()) break;
        }
        for (int k = 0; k <= d.degree(); ++k) {
            const Rational c = d.coeff(k);
            if (c != 0) f.add_term(k, n, coeff * c);
        }
    }
    return f;
}

Polynomial laguerre_derivative(const Polynomial& p) {
    return -(p.derivative().times_indeterminate().derivative());
}

BivariatePolynomial pde_residual(const BivariatePolynomial& f) {
    return f.derivative_t().times_t().derivative_t() + f.derivative_x().derivative_x();
}

}  // namespace umbra
