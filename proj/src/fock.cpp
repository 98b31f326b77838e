#include "umbra/fock.hpp"

#include "umbra/signed_log.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace umbra {

namespace {

constexpr double kCoherentTailLimit = 1e-14;  // squared norm
constexpr double kOmegaTailLimit = 1e-8;
constexpr double kOverlapCrossCheck = 1e-12;

// N_m(x) = sum_k x^k / (k!(m+k)!), x >= 0; the positive normalizer series.
double coherent_normalizer(double x, int m) {
    double term = std::exp(-log_factorial(m));
    double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= x / (static_cast<double>(k) * (m + k));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

}  // namespace

TwoModeState::TwoModeState(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("TwoModeState: cutoff must be nonnegative");
}

void TwoModeState::set(int n1, int n2, Complex amp) {
    if (n1 < 0 || n2 < 0 || n1 + n2 > cutoff_)
        throw std::invalid_argument("TwoModeState: occupation outside the truncated space");
    if (amp == Complex{}) {
        amps_.erase({n1, n2});
        return;
    }
    amps_[{n1, n2}] = amp;
}

Complex TwoModeState::amplitude(int n1, int n2) const {
    auto it = amps_.find({n1, n2});
    return it == amps_.end() ? Complex{} : it->second;
}

double TwoModeState::norm() const {
    double s = 0.0;
    for (const auto& [k, a] : amps_) s += std::norm(a);
    return std::sqrt(s);
}

TwoModeState TwoModeState::scaled(Complex factor) const {
    TwoModeState out(cutoff_);
    if (factor == Complex{}) return out;
    for (const auto& [k, a] : amps_) out.amps_[k] = factor * a;
    out.truncation_loss_ = truncation_loss_ * std::norm(factor);
    return out;
}

SingleModeState::SingleModeState(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("SingleModeState: cutoff must be nonnegative");
}

void SingleModeState::set(int n, Complex amp) {
    if (n < 0 || n > cutoff_)
        throw std::invalid_argument("SingleModeState: occupation outside the truncated space");
    if (amp == Complex{}) {
        amps_.erase(n);
        return;
    }
    amps_[n] = amp;
}

void SingleModeState::accumulate(int n, Complex amp) {
    if (n < 0 || n > cutoff_)
        throw std::invalid_argument("SingleModeState: occupation outside the truncated space");
    const Complex v = amplitude(n) + amp;
    set(n, v);
}

Complex SingleModeState::amplitude(int n) const {
    auto it = amps_.find(n);
    return it == amps_.end() ? Complex{} : it->second;
}

double SingleModeState::norm() const {
    double s = 0.0;
    for (const auto& [k, a] : amps_) s += std::norm(a);
    return std::sqrt(s);
}

SingleModeState SingleModeState::scaled(Complex factor) const {
    SingleModeState out(cutoff_);
    if (factor == Complex{}) return out;
    for (const auto& [k, a] : amps_) out.amps_[k] = factor * a;
    out.truncation_loss_ = truncation_loss_ * std::norm(factor);
    return out;
}

Complex inner_product(const TwoModeState& bra, const TwoModeState& ket) {
    Complex s{};
    for (const auto& [k, a] : bra.amplitudes()) {
        const Complex b = ket.amplitude(k.first, k.second);
        if (b != Complex{}) s += std::conj(a) * b;
    }
    return s;
}

Complex inner_product(const SingleModeState& bra, const SingleModeState& ket) {
    Complex s{};
    for (const auto& [k, a] : bra.amplitudes()) {
        const Complex b = ket.amplitude(k);
        if (b != Complex{}) s += std::conj(a) * b;
    }
    return s;
}

TwoModeState apply_k(KOperator which, const TwoModeState& s) {
    TwoModeState out(s.cutoff());
    for (const auto& [key, amp] : s.amplitudes()) {
        const auto [n1, n2] = key;
        switch (which) {
            case KOperator::plus: {
                const double w = static_cast<double>(n1 + 1) * (n2 + 1);
                if (n1 + 1 + n2 + 1 > s.cutoff()) {
                    out.add_truncation_loss(std::norm(amp) * w);
                } else {
                    out.set(n1 + 1, n2 + 1, out.amplitude(n1 + 1, n2 + 1) + amp * std::sqrt(w));
                }
                break;
            }
            case KOperator::minus: {
                if (n1 == 0 || n2 == 0) break;  // annihilates the floor states
                const double w = static_cast<double>(n1) * n2;
                out.set(n1 - 1, n2 - 1, out.amplitude(n1 - 1, n2 - 1) + amp * std::sqrt(w));
                break;
            }
            case KOperator::zero:
                out.set(n1, n2, out.amplitude(n1, n2) + amp * 0.5 * (n1 + n2 + 1));
                break;
        }
    }
    return out;
}

TwoModeState build_coherent(const CoherentParams& p, int cutoff) {
    if (p.m < 0) throw std::invalid_argument("build_coherent: m must be nonnegative");
    if (cutoff < p.m) throw std::invalid_argument("build_coherent: cutoff below the floor state |0,m>");
    const double x = std::norm(p.alpha);
    const double nm = coherent_normalizer(x, p.m);

    const int n_max = (cutoff - p.m) / 2;  // n + (n+m) <= cutoff

    // omitted tail, squared norm: sum_{n>n_max} x^n/(n!(n+m)!) / N_m
    double tail = 0.0;
    {
        double term = std::exp(static_cast<double>(n_max + 1) * (x > 0.0 ? std::log(x) : 0.0) -
                               log_factorial(n_max + 1) - log_factorial(n_max + 1 + p.m));
        if (x == 0.0) term = 0.0;
        for (int n = n_max + 1; n < n_max + 200 && term > 0.0; ++n) {
            tail += term;
            term *= x / (static_cast<double>(n + 1) * (n + 1 + p.m));
            if (term < 1e-30 * tail) break;
        }
        tail /= nm;
    }
    if (tail >= kCoherentTailLimit) {
        std::ostringstream os;
        os << "build_coherent: cutoff " << cutoff << " too small; omitted tail norm^2 = " << tail
           << " (limit " << kCoherentTailLimit << ")";
        throw std::runtime_error(os.str());
    }

    TwoModeState out(cutoff);
    const double inv_sqrt_nm = 1.0 / std::sqrt(nm);
    Complex alpha_pow{1.0, 0.0};  // (-alpha)^n
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) alpha_pow *= -p.alpha;
        const double denom = std::exp(0.5 * (log_factorial(n) + log_factorial(n + p.m)));
        const Complex amp = alpha_pow / denom * inv_sqrt_nm;
        if (amp != Complex{}) out.set(n, n + p.m, amp);
    }
    out.add_truncation_loss(tail);
    return out;
}

Complex overlap_coherent(const CoherentParams& p, const CoherentParams& q, int cutoff) {
    if (p.m != q.m) return Complex{};
    const Complex z = std::conj(p.alpha) * q.alpha;
    Complex term = std::exp(-log_factorial(p.m));
    Complex sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= z / (static_cast<double>(k) * (p.m + k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    const double nm_p = coherent_normalizer(std::norm(p.alpha), p.m);
    const double nm_q = coherent_normalizer(std::norm(q.alpha), q.m);
    const Complex closed = sum / std::sqrt(nm_p * nm_q);

    const Complex direct = inner_product(build_coherent(p, cutoff), build_coherent(q, cutoff));
    if (std::abs(closed - direct) > kOverlapCrossCheck) {
        std::ostringstream os;
        os << "overlap_coherent: closed series " << closed.real() << "+" << closed.imag()
           << "i disagrees with the sparse inner product " << direct.real() << "+" << direct.imag()
           << "i beyond " << kOverlapCrossCheck;
        throw std::runtime_error(os.str());
    }
    return closed;
}

SingleModeState build_hermite_state(int n, Complex omega, int cutoff) {
    if (n < 0) throw std::invalid_argument("build_hermite_state: n must be nonnegative");
    if (n > cutoff) throw std::invalid_argument("build_hermite_state: n exceeds the cutoff");
    SingleModeState out(cutoff);
    const double r = std::abs(omega);
    const double theta = std::arg(omega);
    if (r == 0.0) {  // every component of |h_n> carries omega^n
        if (n == 0) out.set(0, Complex{1.0, 0.0});
        return out;
    }
    for (int k = 0; 2 * k <= n; ++k) {
        const int occ = n - 2 * k;
        // n! / (2^k k! sqrt((n-2k)!)) * conj(omega)^(n-2k) |omega|^(2k)
        const double mag = std::exp(log_factorial(n) - k * std::log(2.0) - log_factorial(k) -
                                    0.5 * log_factorial(occ) + (n > 0 ? n * std::log(r) : 0.0));
        out.set(occ, std::polar(mag, -static_cast<double>(occ) * theta));
    }
    return out;
}

HermiteOverlapReport overlap_hermite(int n, int m, Complex omega, int cutoff) {
    HermiteOverlapReport report;
    report.direct = inner_product(build_hermite_state(n, omega, cutoff),
                                  build_hermite_state(m, omega, cutoff));
    if (n >= m && (n - m) % 2 == 0) {
        // n! m! / sqrt(2^(n-m)) |Omega|^(n+m)
        //   * sum_{k<=n/2} 1 / (4^k k! ((n-m)/2 + k)! (n-2k)!)
        const int half = (n - m) / 2;
        double sum = 0.0;
        for (int k = 0; 2 * k <= n; ++k) {
            sum += std::exp(-k * std::log(4.0) - log_factorial(k) - log_factorial(half + k) -
                            log_factorial(n - 2 * k));
        }
        const double r = std::abs(omega);
        double value = 0.0;
        if (r > 0.0 || n + m == 0) {
            value = std::exp(log_factorial(n) + log_factorial(m) -
                             0.5 * (n - m) * std::log(2.0) + (n + m > 0 ? (n + m) * std::log(r) : 0.0)) *
                    sum;
        }
        report.formula = Complex{value, 0.0};
        report.difference = std::abs(report.direct - *report.formula);
    }
    return report;
}

Complex proj_hermite(int m, int n, Complex omega) {
    if (m < 0 || n < 0) throw std::invalid_argument("proj_hermite: indices must be nonnegative");
    if (n < m || (n - m) % 2 != 0) return Complex{};
    const double r = std::abs(omega);
    if (r == 0.0) return n == 0 ? Complex{1.0, 0.0} : Complex{};
    const int half = (n - m) / 2;
    const double mag = std::exp(log_factorial(n) - 0.5 * (n - m) * std::log(2.0) -
                                log_factorial(half) - 0.5 * log_factorial(m) + n * std::log(r));
    return std::polar(mag, -static_cast<double>(m) * std::arg(omega));
}

SingleModeState apply_lowering(const SingleModeState& s) {
    SingleModeState out(s.cutoff());
    for (const auto& [n, amp] : s.amplitudes()) {
        if (n == 0) continue;
        out.accumulate(n - 1, amp * std::sqrt(static_cast<double>(n)));
    }
    return out;
}

SingleModeState build_omega_state(const UmbralSequence& seq, Complex omega, int cutoff, int n_h) {
    if (n_h < 0) throw std::invalid_argument("build_omega_state: N_h must be nonnegative");
    if (n_h > cutoff) throw std::invalid_argument("build_omega_state: N_h exceeds the cutoff");

    SingleModeState out(cutoff);
    for (int n = 0; n <= n_h; ++n) {
        const SignedLog c = seq.coefficient(n);
        if (c.sign == 0) continue;
        const double w = c.sign * std::exp(c.log_mag - log_factorial(n));
        const SingleModeState hn = build_hermite_state(n, omega, cutoff);
        for (const auto& [occ, amp] : hn.amplitudes()) out.accumulate(occ, w * amp);
    }

    // tail over n > n_h: |c_n|/n! * ||h_n||, with
    // ||h_n||^2 = (n!)^2 |Omega|^(2n) sum_k 1/(4^k (k!)^2 (n-2k)!),
    // so each contribution is |c_n| |Omega|^n sqrt(sum_k ...).
    const double r = std::abs(omega);
    double tail = 0.0;
    for (int n = n_h + 1; n <= n_h + 6; ++n) {
        const SignedLog c = seq.coefficient(n);
        if (c.sign == 0 || r == 0.0) continue;
        double s = 0.0;
        for (int k = 0; 2 * k <= n; ++k)
            s += std::exp(-k * std::log(4.0) - 2.0 * log_factorial(k) - log_factorial(n - 2 * k));
        tail += std::exp(c.log_mag + n * std::log(r)) * std::sqrt(s);
    }
    tail *= 2.0;  // safety factor
    out.add_truncation_loss(tail);
    if (r <= 1.0 && tail > kOmegaTailLimit) {
        std::ostringstream os;
        os << "build_omega_state: omitted-tail norm estimate " << tail << " exceeds "
           << kOmegaTailLimit << "; increase N_h";
        throw std::runtime_error(os.str());
    }
    return out;
}

}  // namespace umbra
