#include "ccc/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "ccc/exact.hpp"
#include "ccc/numeric.hpp"
#include "ccc/quadrature.hpp"

namespace ccc {

Regime Regime::critical(double c) {
  if (!(c > 0)) throw std::domain_error("Regime: critical label requires c > 0");
  return {Tag::critical, c};
}

std::string Regime::describe() const {
  switch (tag) {
    case Tag::subcritical:
      return "p = o(1/m)";
    case Tag::critical:
      return "p ~ c/m with c = " + format_double(c);
    case Tag::supercritical:
      return "p = omega(1/m)";
    case Tag::fixed_p:
      return "p constant in m";
  }
  return {};
}

Rescaling rescaling_for(const Regime& regime, int m, double p) {
  if (m < 1) throw std::domain_error("rescaling_for: m must be >= 1");
  const double center = m * std::log(m);
  switch (regime.tag) {
    case Regime::Tag::subcritical:
    case Regime::Tag::critical:
      return {center, static_cast<double>(m), false};
    case Regime::Tag::supercritical:
    case Regime::Tag::fixed_p: {
      const double scale = p * std::exp(m * std::log1p(-p));
      if (!(scale > 0)) throw std::domain_error("rescaling_for: p (1-p)^m must be positive");
      return {center, scale, true};
    }
  }
  throw std::logic_error("rescaling_for: unreachable");
}

std::vector<double> rescale(std::span<const double> samples, int m, double p,
                            const Regime& regime) {
  const Rescaling r = rescaling_for(regime, m, p);
  std::vector<double> out;
  out.reserve(samples.size());
  for (double x : samples) out.push_back(r.apply(x));
  return out;
}

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double gumbel_mgf(double t) {
  if (!(t < 1)) throw std::domain_error("gumbel_mgf: requires t < 1");
  return std::tgamma(1.0 - t);
}

double gumbel_quantile(double u) {
  if (!(u > 0 && u < 1)) throw std::domain_error("gumbel_quantile: u must lie in (0,1)");
  return -std::log(-std::log(u));
}

double tau_c_laplace(double c, double s, double rel_tol) {
  if (!(c > 0)) throw std::domain_error("tau_c_laplace: c must be positive");
  if (!(s >= 0)) throw std::domain_error("tau_c_laplace: s must be >= 0");
  const double integral = integrate(
      [&](double x) { return std::exp(s * std::log1p(-x) - c * x); }, 0.0, 1.0,
      rel_tol, 1e-300);
  return std::exp(-c) / (1.0 - c * integral);
}

double critical_limit_mgf(double c, double t) {
  if (!(t < 0)) throw std::domain_error("critical_limit_mgf: requires t < 0");
  return gumbel_mgf(t) * tau_c_laplace(c, -t);
}

double I_extra(const ModelParams& params, double t, double rel_tol) {
  params.validate();
  if (t > 0) throw std::domain_error("I_extra: t must be <= 0");
  const double p = params.p_double();
  const int m = params.m;
  if (p == 0.0 || t == 0.0) return 1.0;
  const double alpha = m * std::expm1(-t);
  const double log_pm = std::log(p) + std::log(m);
  const double defect = integrate(
      [&](double x) {
        return std::exp(log_pm + (m - 1) * std::log1p(-p * x)) *
               (-std::expm1(alpha * std::log1p(-x)));
      },
      0.0, 1.0, rel_tol, 1e-300);
  const double log_qm = m * std::log1p(-p);
  const double qm = std::exp(log_qm);
  if (qm > 0.0) return qm / (qm + defect);
  return std::exp(log_qm - std::log(defect > 0 ? defect : 1e-300));
}

double classical_variance(int m) {
  if (m < 1) throw std::domain_error("classical_variance: m must be >= 1");
  return static_cast<double>(m) * m * harmonic2(m) - m * harmonic(m);
}

FixedPSeries fixed_p_mean_series(double p) {
  if (!(p > 0 && p < 1)) throw std::domain_error("fixed_p_mean_series: p must lie in (0,1)");
  return {1.0 / p - 1.0, 2.0 / (p * p) - 3.0 / p + 1.0};
}

FixedPSeries fixed_p_variance_series(double p) {
  if (!(p > 0 && p < 1))
    throw std::domain_error("fixed_p_variance_series: p must lie in (0,1)");
  return {2.0 / p - 2.0, 5.0 / (p * p) - 8.0 / p + 3.0};
}

namespace {

void require_positive_p(const ModelParams& params, const char* who) {
  if (params.p_double() == 0.0)
    throw std::domain_error(std::string(who) + ": this regime requires p > 0");
}

// Moments of the limiting hitting time, from its Laplace transform
// Phi(s) = e^{-c} / D(s) with D(s) = 1 - c int_0^1 (1-x)^s e^{-cx} dx:
// D(0) = e^{-c}, -D'(0) = c int log(1/(1-x)) e^{-cx} dx, which integrates
// by parts to c e^{-c} + c^2 int e^{-cx} L(x) dx, so that
//   E tau   = c + c^2 e^c int_0^1 e^{-cx} L(x) dx,
//   E tau^2 = 2 (E tau)^2 + 2c + c^2 e^c int_0^1 e^{-cx} N(x) dx.
double hitting_time_mean(double c, double rel_tol) {
  const double integral = integrate(
      [&](double x) { return std::exp(-c * x) * collector_L(x); }, 0.0, 1.0, rel_tol,
      1e-300);
  return c + c * c * std::exp(c) * integral;
}

double hitting_time_variance(double c, double rel_tol) {
  const double mean = hitting_time_mean(c, rel_tol);
  const double integral = integrate(
      [&](double x) { return std::exp(-c * x) * collector_N(x); }, 0.0, 1.0, rel_tol,
      1e-300);
  return mean * mean + 2.0 * c + c * c * std::exp(c) * integral;
}

}  // namespace

double mean_asymptotic(const ModelParams& params, const Regime& regime, double rel_tol) {
  params.validate();
  const int m = params.m;
  const double p = params.p_double();
  const double base = m * harmonic(m);
  switch (regime.tag) {
    case Regime::Tag::subcritical:
      return base + p * static_cast<double>(m) * m +
             0.25 * p * p * static_cast<double>(m) * m * m;
    case Regime::Tag::critical:
      return base + m * hitting_time_mean(regime.c, rel_tol);
    case Regime::Tag::supercritical:
      require_positive_p(params, "mean_asymptotic");
      return base + std::exp(-m * std::log1p(-p)) / p;
    case Regime::Tag::fixed_p: {
      require_positive_p(params, "mean_asymptotic");
      const FixedPSeries s = fixed_p_mean_series(p);
      const double lead = std::exp(-m * std::log1p(-p)) / p;
      return base + lead * (1.0 + s.a1 / m + s.a2 / (static_cast<double>(m) * m));
    }
  }
  throw std::logic_error("mean_asymptotic: unreachable");
}

double variance_asymptotic(const ModelParams& params, const Regime& regime,
                           double rel_tol) {
  params.validate();
  const int m = params.m;
  const double p = params.p_double();
  const double base = classical_variance(m);
  const double md = m;
  switch (regime.tag) {
    case Regime::Tag::subcritical:
      return base + 2.0 * p * md * md * md - p * md * md +
             1.25 * p * p * md * md * md * md;
    case Regime::Tag::critical:
      return base + md * md * hitting_time_variance(regime.c, rel_tol);
    case Regime::Tag::supercritical:
      require_positive_p(params, "variance_asymptotic");
      return base + std::exp(-2.0 * m * std::log1p(-p)) / (p * p);
    case Regime::Tag::fixed_p: {
      require_positive_p(params, "variance_asymptotic");
      const FixedPSeries s = fixed_p_variance_series(p);
      const double lead = std::exp(-2.0 * m * std::log1p(-p)) / (p * p);
      return base + lead * (1.0 + s.a1 / m + s.a2 / (md * md));
    }
  }
  throw std::logic_error("variance_asymptotic: unreachable");
}

double tail_bound(const ModelParams& params, double r, double rel_tol) {
  params.validate();
  if (!(r > 0)) throw std::domain_error("tail_bound: r must be positive");
  const double bound = 2.0 - 2.0 * mgf_eval(params, -1.0 / r, rel_tol);
  return std::min(2.0, std::max(0.0, bound));
}

double classical_mgf_limit_check(int m, double t) {
  if (!(t < 0)) throw std::domain_error("classical_mgf_limit_check: requires t < 0");
  return std::exp(-t * std::log(m)) * mgf_classical(m, t / m);
}

}  // namespace ccc
