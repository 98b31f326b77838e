#include "umbra/transforms.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace umbra {

namespace {

constexpr double kFourierIntegrandCap = 1e6;

double route_scale(const RealEvaluation& e) { return std::max(1.0, std::abs(e.value)); }

}  // namespace

GaussLaguerreRule::GaussLaguerreRule(int order, double alpha) {
    if (order < 2) throw std::invalid_argument("GaussLaguerreRule: order must be >= 2");
    if (!(alpha > -1.0)) throw std::invalid_argument("GaussLaguerreRule: alpha must exceed -1");

    // Jacobi matrix of the L_n^alpha recurrence: a_k = 2k+1+alpha,
    // b_k = sqrt(k(k+alpha)).
    Eigen::VectorXd diag(order), sub(order - 1);
    for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0 + alpha;
    for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(k * (k + alpha));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("GaussLaguerreRule: tridiagonal eigensolve failed");

    nodes.resize(order);
    weights.resize(order);
    for (int i = 0; i < order; ++i) {
        nodes[i] = es.eigenvalues()[i];
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = v0 * v0;  // unit total mass
    }
}

QuadratureSpec QuadratureSpec::gauss_laguerre(int order, double tol) {
    QuadratureSpec q;
    q.scheme = Scheme::gauss_laguerre;
    q.order = order;
    q.tol = tol;
    q.validate();
    return q;
}

QuadratureSpec QuadratureSpec::adaptive_trapezoid(double lower, double upper, int max_refinements,
                                                  double tol) {
    QuadratureSpec q;
    q.scheme = Scheme::adaptive_trapezoid;
    q.lower = lower;
    q.upper = upper;
    q.max_refinements = max_refinements;
    q.tol = tol;
    q.validate();
    return q;
}

void QuadratureSpec::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("QuadratureSpec: tol must be positive");
    if (scheme == Scheme::gauss_laguerre) {
        if (order < 2) throw std::invalid_argument("QuadratureSpec: order must be >= 2");
    } else {
        if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper))
            throw std::invalid_argument("QuadratureSpec: trapezoid bounds must be finite with lower < upper");
        if (max_refinements < 1)
            throw std::invalid_argument("QuadratureSpec: max_refinements must be >= 1");
    }
}

TransformResult umbral_laplace(const UmbralSequence& seq, double nu, double x,
                               const QuadratureSpec& q) {
    q.validate();
    if (q.scheme != QuadratureSpec::Scheme::gauss_laguerre)
        throw std::invalid_argument("umbral_laplace: expects a gauss_laguerre quadrature spec");
    if (!(nu > 0.0)) throw std::invalid_argument("umbral_laplace: nu must be positive");
    if (!(x >= 0.0)) throw std::invalid_argument("umbral_laplace: x must be nonnegative");

    TransformResult out;

    // quadrature route, with a half-order companion rule as error gauge
    const SeriesOptions inner{std::min(q.tol * 1e-2, 1e-12), kDefaultMaxTerms};
    auto apply_rule = [&](int order, bool& all_converged, int& evals) -> double {
        const GaussLaguerreRule rule(order, nu - 1.0);
        double sum = 0.0;
        for (int i = 0; i < order; ++i) {
            const RealEvaluation f = eval_pseudo_exp(seq, -rule.nodes[i] * x, inner);
            if (!f.converged) all_converged = false;
            sum += rule.weights[i] * f.value;
            ++evals;
        }
        return sum;
    };
    {
        bool all_converged = true;
        int evals = 0;
        const double full = apply_rule(q.order, all_converged, evals);
        const double half = apply_rule(std::max(2, q.order / 2), all_converged, evals);
        out.quadrature.value = full;
        out.quadrature.terms_used = evals;
        out.quadrature.tail_estimate = std::abs(full - half);
        out.quadrature.converged =
            all_converged && out.quadrature.tail_estimate <= q.tol * route_scale(out.quadrature);
        if (!out.quadrature.converged)
            out.quadrature.diagnostic = all_converged
                                            ? "half-order comparison above tolerance"
                                            : "pseudo-exponential did not converge at a quadrature node";
    }

    // series route, when the coefficient family admits one
    if (seq.kind() == SequenceKind::inverse_shifted_factorial) {
        const long m = seq.isf_m();
        const long p_eff = seq.isf_p() + m * seq.shift();  // shift folds into p
        const double log_gamma_nu = std::lgamma(nu);
        const bool x_zero = (x == 0.0);
        const double log_x = x_zero ? 0.0 : std::log(x);
        long k = 0;
        auto gen = [&]() -> double {
            const long i = k++;
            if (x_zero && i > 0) return 0.0;
            double lm = std::lgamma(static_cast<double>(i) + nu) - log_gamma_nu -
                        log_factorial(i) - log_factorial(m * i + p_eff);
            if (i > 0) lm += static_cast<double>(i) * log_x;
            return (i % 2 == 0 ? 1.0 : -1.0) * std::exp(lm);
        };
        out.series = sum_with_stop_rule<double>(gen, SeriesOptions{q.tol, kDefaultMaxTerms});
    }

    if (out.series) {
        out.abs_diff = std::abs(out.series->value - out.quadrature.value);
        if (out.series->converged && out.quadrature.converged &&
            out.abs_diff > 10.0 * q.tol * route_scale(*out.series)) {
            std::ostringstream os;
            os << "umbral_laplace: series and quadrature routes disagree by " << out.abs_diff
               << " at nu=" << nu << " x=" << x;
            throw std::runtime_error(os.str());
        }
    }
    return out;
}

TransformResult umbral_fourier(std::span<const double> f_coeffs,
                               const std::function<double(double)>& f_tilde,
                               const UmbralSequence& seq, double x, const QuadratureSpec& q) {
    q.validate();
    if (q.scheme != QuadratureSpec::Scheme::adaptive_trapezoid)
        throw std::invalid_argument("umbral_fourier: expects an adaptive_trapezoid quadrature spec");
    if (!f_tilde) throw std::invalid_argument("umbral_fourier: f_tilde evaluator required");
    if (!std::isfinite(x)) throw std::invalid_argument("umbral_fourier: x must be finite");

    TransformResult out;

    // direct route: sum_n f_n c_n x^n over the supplied Taylor coefficients
    {
        RealEvaluation direct;
        const bool x_zero = (x == 0.0);
        const double log_x = x_zero ? 0.0 : std::log(std::abs(x));
        double sum = 0.0, comp = 0.0;
        for (std::size_t n = 0; n < f_coeffs.size(); ++n) {
            if (x_zero && n > 0) break;
            if (f_coeffs[n] == 0.0) continue;
            const SignedLog c = seq.coefficient(static_cast<long>(n));
            if (c.sign == 0) continue;
            double t = c.sign * std::exp(c.log_mag + std::log(std::abs(f_coeffs[n])) +
                                         static_cast<double>(n) * (n > 0 ? log_x : 0.0));
            if (f_coeffs[n] < 0.0) t = -t;
            if (x < 0.0 && (n & 1)) t = -t;
            const double y = t - comp;
            const double s = sum + y;
            comp = (s - sum) - y;
            sum = s;
        }
        direct.value = sum;
        direct.terms_used = static_cast<int>(f_coeffs.size());
        direct.converged = true;  // a finite supplied sum
        out.series = direct;
    }

    // quadrature route: refined trapezoid of f_tilde(k) f(i k x)
    {
        const SeriesOptions inner{std::min(q.tol * 1e-2, 1e-12), kDefaultMaxTerms};
        bool inner_failed = false;
        std::string inner_diag;
        auto integrand = [&](double k) -> std::complex<double> {
            const double ft = f_tilde(k);
            const ComplexEvaluation f = eval_pseudo_exp(seq, std::complex<double>(0.0, k * x), inner);
            if (!f.converged && !inner_failed) {
                inner_failed = true;
                inner_diag = "pseudo-exponential did not converge at k=" + std::to_string(k);
            }
            const std::complex<double> v = ft * f.value;
            if (std::abs(v) > kFourierIntegrandCap) {
                std::ostringstream os;
                os << "umbral_fourier: integrand magnitude " << std::abs(v) << " at k=" << k
                   << " exceeds " << kFourierIntegrandCap << "; outside the usable domain";
                throw std::runtime_error(os.str());
            }
            return v;
        };

        const double a = q.lower, b = q.upper;
        int panels = 16;
        std::complex<double> t_prev =
            0.5 * (b - a) / panels * (integrand(a) + integrand(b));
        {  // complete the first trapezoid sum
            std::complex<double> interior{};
            for (int i = 1; i < panels; ++i) interior += integrand(a + i * (b - a) / panels);
            t_prev += (b - a) / panels * interior;
        }
        std::complex<double> t_curr = t_prev;
        bool refined_enough = false;
        int evals = panels + 1;
        double last_diff = std::numeric_limits<double>::infinity();
        for (int r = 0; r < q.max_refinements; ++r) {
            const int new_points = panels;
            const double h = (b - a) / panels;
            std::complex<double> mid{};
            for (int i = 0; i < new_points; ++i) mid += integrand(a + (i + 0.5) * h);
            evals += new_points;
            t_curr = 0.5 * t_prev + 0.5 * h * mid;
            panels *= 2;
            last_diff = std::abs(t_curr - t_prev);
            if (last_diff <= q.tol * std::max(1.0, std::abs(t_curr)) && r >= 2) {
                refined_enough = true;
                break;
            }
            t_prev = t_curr;
        }

        const std::complex<double> integral = t_curr / std::sqrt(2.0 * std::numbers::pi);
        out.quadrature.value = integral.real();
        out.quadrature.terms_used = evals;
        out.quadrature.tail_estimate =
            last_diff / std::sqrt(2.0 * std::numbers::pi) + std::abs(integral.imag());
        out.quadrature.converged = refined_enough && !inner_failed;
        if (!out.quadrature.converged)
            out.quadrature.diagnostic =
                inner_failed ? inner_diag : "trapezoid refinement budget exhausted";
    }

    out.abs_diff = std::abs(out.series->value - out.quadrature.value);
    if (out.series->converged && out.quadrature.converged &&
        out.abs_diff > 10.0 * q.tol * route_scale(*out.series)) {
        std::ostringstream os;
        os << "umbral_fourier: direct and quadrature routes disagree by " << out.abs_diff
           << " at x=" << x;
        throw std::runtime_error(os.str());
    }
    return out;
}

std::vector<double> gaussian_taylor_coeffs(int count) {
    if (count < 1) throw std::invalid_argument("gaussian_taylor_coeffs: count must be positive");
    std::vector<double> c(static_cast<std::size_t>(count), 0.0);
    // exp(-x^2/2) = sum_j (-1)^j x^(2j) / (2^j j!)
    for (int j = 0; 2 * j < count; ++j)
        c[static_cast<std::size_t>(2 * j)] =
            (j % 2 == 0 ? 1.0 : -1.0) * std::exp(-j * std::log(2.0) - log_factorial(j));
    return c;
}

double gaussian_fourier_transform(double k) { return std::exp(-0.5 * k * k); }

}  // namespace umbra
