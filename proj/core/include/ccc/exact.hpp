#pragma once

#include <vector>

#include "ccc/model.hpp"
#include "ccc/numeric.hpp"
#include "ccc/scalar.hpp"

namespace ccc {

/// Truncated law of the collection time. probs[n] = P(T = n) for
/// n = 0..n_max; tail_mass is the residual 1 - sum(probs);
/// tail_certificate is an upper bound on P(T > n_max), never below
/// tail_mass as stored.
struct Pmf {
  std::vector<Scalar> probs;
  int n_max = 0;
  Scalar tail_mass = Scalar::exact(0);
  Scalar tail_certificate = Scalar::exact(0);
  ScalarMode mode() const { return probs.front().mode(); }
};

enum class MomentMethod { closed_form, pmf_sum, monte_carlo };

struct MomentReport {
  Scalar mean = Scalar::exact(0);
  Scalar variance = Scalar::exact(0);
  Scalar second_moment = Scalar::exact(0);
  MomentMethod method = MomentMethod::closed_form;
};

/// P(T = n) as series coefficients of ogf_H / ogf_G.
Pmf pmf_series(const ModelParams& params, int n_max);

/// P(T = n) by dynamic programming over the count of standing urns:
/// from k < m the count moves up with probability (1-p)(m-k)/m, down with
/// probability p k / m, and m is absorbing.
Pmf pmf_markov(const ModelParams& params, int n_max);

/// E T = m sum_{l=1..m} 1/(l (1-p)^l). Exact in rational mode; compensated
/// ascending summation in floating mode. Throws OverflowError (with a
/// log10 estimate) when the floating result is not representable.
Scalar mean_closed(const ModelParams& params);

/// Var T evaluated as a sum of two nonnegative parts in exact mode and via
/// the equivalent harmonic-sum identity in floating mode.
Scalar variance_closed(const ModelParams& params);

MomentReport moments_closed(const ModelParams& params);
MomentReport moments_from_pmf(const Pmf& pmf);

/// Geometric certificate (1-q)^ceil((n+1-m)/m), q = ((1-p)/m)^m, bounding
/// P(T > n).
double tail_certificate_bound(const ModelParams& params, int n);

struct MgfDiagnostics {
  bool sum_form_checked = false;
  double sum_form_value = 0;
  double rel_difference = 0;
  bool mismatch = false;
};

/// M_T(t) for t <= 0 through the factored form: the classical collector
/// factor times the standing-repair factor evaluated by quadrature. When
/// m <= 20 and t is moderate the alternating-sum form is evaluated as a
/// self-check; a disagreement is reported through `diag` (the factored
/// value is always the one returned).
double mgf_eval(const ModelParams& params, double t, double rel_tol = 1e-10,
                MgfDiagnostics* diag = nullptr);

/// 1 / binom(m e^{-t}, m) in the log-gamma domain, t <= 0.
double mgf_classical(int m, double t);

/// Reciprocal of sum_{l=0..m} (-1)^l binom(m - m e^{-t}, l) (1-p)^{-l};
/// positive terms for t <= 0 but overflow-limited, intended for m <= 20.
double mgf_sum_form(const ModelParams& params, double t);

/// P(T > n) = tail_mass + sum_{k>n} probs[k]; exact in rational mode.
Scalar tail_from_pmf(const Pmf& pmf, int n);

/// E[T_{m,p} - T_{m,0}] via the integrated-by-parts moment formula (the
/// integrand is bounded, no endpoint log singularity). Returns 0 at p = 0.
double mean_diff_integral(const ModelParams& params, double rel_tol = 1e-10);

/// E[(T_{m,p} - T_{m,0})^2] = 2 E[diff]^2 - E[diff] + Xi with the
/// bounded-integrand Xi form. Returns 0 at p = 0.
double second_moment_diff(const ModelParams& params, double rel_tol = 1e-10);

}  // namespace ccc
