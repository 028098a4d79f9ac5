#pragma once

#include <span>
#include <string>
#include <vector>

#include "ccc/model.hpp"

namespace ccc {

/// Asymptotic class of a clumsiness sequence p_m relative to 1/m. The
/// label is supplied by the caller: it is a property of a sequence, not of
/// a single (m, p) point, so the library never infers it.
struct Regime {
  enum class Tag { subcritical, critical, supercritical, fixed_p };
  Tag tag = Tag::subcritical;
  double c = 0;  // critical only: p ~ c/m

  static Regime subcritical() { return {Tag::subcritical, 0}; }
  static Regime critical(double c);
  static Regime supercritical() { return {Tag::supercritical, 0}; }
  static Regime fixed_p() { return {Tag::fixed_p, 0}; }

  /// Which p-sequence the label encodes.
  std::string describe() const;
};

/// Affine map applied to raw collection times before a limit-law
/// comparison: (x - center)/scale or scale*(x - center).
struct Rescaling {
  double center = 0;
  double scale = 1;
  bool multiply = false;

  double apply(double x) const {
    return multiply ? scale * (x - center) : (x - center) / scale;
  }
};

/// Centering m log m with scale m (divide) for the subcritical and
/// critical labels, scale p (1-p)^m (multiply) for the supercritical and
/// fixed-p labels.
Rescaling rescaling_for(const Regime& regime, int m, double p);

std::vector<double> rescale(std::span<const double> samples, int m, double p,
                            const Regime& regime);

double gumbel_cdf(double x);
/// Gamma(1 - t) for t < 1.
double gumbel_mgf(double t);
double gumbel_quantile(double u);

/// E e^{-s tau_c} = e^{-c} [1 - c int_0^1 (1-x)^s e^{-cx} dx]^{-1}.
double tau_c_laplace(double c, double s, double rel_tol = 1e-10);

/// MGF of the critical limit: gumbel_mgf(t) * tau_c_laplace(c, -t), t < 0.
double critical_limit_mgf(double c, double t);

/// MGF of the coupling difference T_{m,p} - T_{m,0} at t <= 0, evaluated
/// as (1-p)^m / ((1-p)^m + D(t)) with the nonnegative defect integral
/// D(t) = int_0^1 p m (1-p x)^{m-1} (1 - (1-x)^{m(e^{-t}-1)}) dx.
double I_extra(const ModelParams& params, double t, double rel_tol = 1e-10);

/// m^2 H_m^(2) - m H_m.
double classical_variance(int m);

/// Regime-specific expansion of E T. Quadrature appears only in the
/// critical branch. fixed_p and supercritical require p > 0.
double mean_asymptotic(const ModelParams& params, const Regime& regime,
                       double rel_tol = 1e-10);
double variance_asymptotic(const ModelParams& params, const Regime& regime,
                           double rel_tol = 1e-10);

/// Markov-type bound 2 - 2 M_T(-1/r) on P(T >= r), clamped to [0, 2].
double tail_bound(const ModelParams& params, double r, double rel_tol = 1e-10);

/// m^{-t} / binom(m e^{-t/m}, m); approaches gumbel_mgf(t) as m grows.
double classical_mgf_limit_check(int m, double t);

/// Coefficients {1, a1, a2} of the fixed-p correction series in powers of
/// 1/m multiplying (1-p)^{-m}/p (mean) and (1-p)^{-2m}/p^2 (variance).
struct FixedPSeries {
  double a1 = 0;
  double a2 = 0;
};
FixedPSeries fixed_p_mean_series(double p);
FixedPSeries fixed_p_variance_series(double p);

}  // namespace ccc
