#pragma once

#include "umbra/sequence.hpp"

#include <complex>
#include <map>
#include <optional>
#include <utility>

namespace umbra {

using Complex = std::complex<double>;

// Sparse two-mode occupation-number state, keys (n1, n2) with
// n1 + n2 <= cutoff. Zero amplitudes are pruned. Operators return new states
// and record the squared norm lost past the cutoff in truncation_loss.
class TwoModeState {
public:
    explicit TwoModeState(int cutoff);

    void set(int n1, int n2, Complex amp);
    Complex amplitude(int n1, int n2) const;
    const std::map<std::pair<int, int>, Complex>& amplitudes() const { return amps_; }
    int cutoff() const { return cutoff_; }
    double truncation_loss() const { return truncation_loss_; }
    void add_truncation_loss(double squared_norm) { truncation_loss_ += squared_norm; }
    double norm() const;
    TwoModeState scaled(Complex factor) const;

private:
    std::map<std::pair<int, int>, Complex> amps_;
    int cutoff_;
    double truncation_loss_ = 0.0;
};

// Sparse single-mode state, keys 0 <= n <= cutoff.
class SingleModeState {
public:
    explicit SingleModeState(int cutoff);

    void set(int n, Complex amp);
    void accumulate(int n, Complex amp);
    Complex amplitude(int n) const;
    const std::map<int, Complex>& amplitudes() const { return amps_; }
    int cutoff() const { return cutoff_; }
    double truncation_loss() const { return truncation_loss_; }
    void add_truncation_loss(double squared_norm) { truncation_loss_ += squared_norm; }
    double norm() const;
    SingleModeState scaled(Complex factor) const;

private:
    std::map<int, Complex> amps_;
    int cutoff_;
    double truncation_loss_ = 0.0;
};

Complex inner_product(const TwoModeState& bra, const TwoModeState& ket);
Complex inner_product(const SingleModeState& bra, const SingleModeState& ket);

enum class KOperator { plus, minus, zero };

// SU(1,1) generators built from two boson modes:
//   K+ |n1,n2> = sqrt((n1+1)(n2+1)) |n1+1,n2+1>
//   K- |n1,n2> = sqrt(n1 n2)        |n1-1,n2-1>
//   K0 |n1,n2> = (n1+n2+1)/2        |n1,n2>
// K+ drops components past the cutoff and records the lost squared norm.
TwoModeState apply_k(KOperator which, const TwoModeState& s);

struct CoherentParams {
    Complex alpha;
    int m = 0;  // photon number offset of mode 2
};

// Unit-normalized coherent state with amplitudes proportional to
// (-alpha)^n / sqrt(n! (n+m)!) on |n, n+m>. The normalizer is the positive
// series N_m(|alpha|^2) = sum_k |alpha|^(2k)/(k!(m+k)!).
// Throws std::runtime_error when the cutoff leaves a tail of squared norm
// >= 1e-14.
TwoModeState build_coherent(const CoherentParams& p, int cutoff);

// <alpha,m | alpha',m'> by the closed series
// delta_{mm'} * sum_k (conj(alpha) alpha')^k/(k!(m+k)!) / sqrt(N_m N_m'),
// cross-checked internally against the sparse inner product to 1e-12.
Complex overlap_coherent(const CoherentParams& p, const CoherentParams& q, int cutoff);

// Hermite quantum state |h_n> with components
// n! (conj(Omega))^(n-2k) |Omega|^(2k) / (2^k k! sqrt((n-2k)!)) on |n-2k>.
SingleModeState build_hermite_state(int n, Complex omega, int cutoff);

// <h_n | h_m>: the value is the direct sparse inner product; when n - m is a
// nonnegative even integer the closed formula is evaluated alongside and
// reported (it disagrees off the diagonal, e.g. (2,0): direct |Omega|^2 vs
// formula 0.625 |Omega|^2; reported, not resolved).
struct HermiteOverlapReport {
    Complex direct;
    std::optional<Complex> formula;
    double difference = 0.0;  // |direct - formula| when formula is present
};
HermiteOverlapReport overlap_hermite(int n, int m, Complex omega, int cutoff);

// <m | h_n>: zero when n-m is odd or negative, else
// n!/sqrt(2^(n-m)) (conj(Omega))^m |Omega|^(n-m) / (((n-m)/2)! sqrt(m!)).
Complex proj_hermite(int m, int n, Complex omega);

// a |n> = sqrt(n) |n-1>.
SingleModeState apply_lowering(const SingleModeState& s);

// Umbral displaced vacuum sum_{n<=n_h} c_n/n! |h_n>. The omitted-tail norm
// estimate is attached as truncation_loss; throws std::runtime_error when it
// exceeds 1e-8 for |Omega| <= 1.
SingleModeState build_omega_state(const UmbralSequence& seq, Complex omega, int cutoff, int n_h);

}  // namespace umbra
