#pragma once

#include "umbra/polynomial.hpp"
#include "umbra/sequence.hpp"
#include "umbra/series.hpp"

namespace umbra {

// Action of exp(lambda*c*d/dx) on a polynomial: the umbral shift
// g(x) -> g(x + lambda*c), computed termwise by the binomial rule
// x^n -> sum_k C(n,k) lambda^k c_k x^(n-k). Exact (lambda enters as a dyadic
// rational).
Polynomial umbral_shift_poly(const UmbralSequence& seq, const Polynomial& g, double lambda);

// Factor f(lambda) with exp(lambda*c*x*d/dx) x = f(lambda) x. Same code path
// as eval_pseudo_exp, kept as a named action.
RealEvaluation dilation_action(const UmbralSequence& seq, double lambda,
                               const SeriesOptions& opts = {});

// exp(lambda*c*x^2*d/dx) x = x * q(x), q(x) = sum_n c_n (lambda x)^n.
// Divergence (e.g. ones with |lambda x| >= 1) is reported through the
// converged flag, not thrown.
RealEvaluation projective_action(const UmbralSequence& seq, double lambda, double x,
                                 const SeriesOptions& opts = {});

// phi_n(x) = sum_k c_{n+k} x^k / k!, the n-th addition component.
RealEvaluation phi_n(const UmbralSequence& seq, int n, double x, const SeriesOptions& opts = {});

// f(x+y) decomposed as sum_{n<=n_outer} y^n/n! * phi_n(x).
RealEvaluation addition_decomposition(const UmbralSequence& seq, double x, double y, int n_outer,
                                      const SeriesOptions& opts = {});

}  // namespace umbra
