#include "ccc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ccc/langgf.hpp"
#include "ccc/quadrature.hpp"
#include "ccc/series.hpp"

namespace ccc {

namespace {

Scalar scalar_int(long n, ScalarMode mode) {
  return mode == ScalarMode::exact ? Scalar::exact(n)
                                   : Scalar::floating(static_cast<long double>(n));
}

Scalar kahan_sum(const std::vector<Scalar>& terms, ScalarMode mode) {
  if (mode == ScalarMode::exact) {
    Scalar s = Scalar::exact(0);
    for (const auto& t : terms) s += t;
    return s;
  }
  long double sum = 0, comp = 0;
  for (const auto& t : terms) {
    const long double term = t.flt() - comp;
    const long double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return Scalar::floating(sum);
}

// Finalizes tail bookkeeping shared by both pmf routes. `residual` is the
// computed 1 - sum(probs) (exact in rational mode).
void set_tail_fields(Pmf& pmf, const ModelParams& params, Scalar residual) {
  const ScalarMode mode = pmf.mode();
  if (mode == ScalarMode::floating && residual.flt() < 0.0L)
    residual = Scalar::zero(mode);
  pmf.tail_mass = residual;

  const double geom = tail_certificate_bound(params, pmf.n_max);
  Scalar cert = Scalar::zero(mode);
  if (geom <= 0.5) {
    // The proof bound is informative here.
    if (mode == ScalarMode::exact) {
      const Rational p = params.working_p().rat();
      const Rational q = ((Rational(1) - p) / Rational(params.m)).pow(params.m);
      const long k = (pmf.n_max + 1 - params.m + params.m - 1) / params.m;
      cert = Scalar::exact((Rational(1) - q).pow(k));
    } else {
      cert = Scalar::floating(geom);
    }
  } else {
    // q is so small that the geometric bound says nothing; certify with
    // the residual itself.
    cert = residual;
  }
  if (cert < pmf.tail_mass) cert = pmf.tail_mass;
  pmf.tail_certificate = cert;
}

}  // namespace

double tail_certificate_bound(const ModelParams& params, int n) {
  params.validate();
  if (n < params.m) return 1.0;
  const double p = params.p_double();
  const double log_q = params.m * (std::log1p(-p) - std::log(params.m));
  const double k = std::ceil(static_cast<double>(n + 1 - params.m) / params.m);
  const double log_one_minus_q = std::log1p(-std::exp(log_q));
  return std::exp(k * log_one_minus_q);
}

Pmf pmf_series(const ModelParams& params, int n_max) {
  params.validate();
  if (n_max < params.m) throw std::invalid_argument("pmf_series: n_max must be >= m");
  const RationalGF ratio = RationalGF::divide(ogf_H(params), ogf_G(params));
  FormalSeries series = ratio.expand(n_max);

  Pmf pmf;
  pmf.probs = series.coeffs();
  pmf.n_max = n_max;
  const ScalarMode mode = params.working_mode();
  Scalar residual = Scalar::one(mode) - kahan_sum(pmf.probs, mode);
  set_tail_fields(pmf, params, residual);
  return pmf;
}

Pmf pmf_markov(const ModelParams& params, int n_max) {
  params.validate();
  if (n_max < params.m) throw std::invalid_argument("pmf_markov: n_max must be >= m");
  const ScalarMode mode = params.working_mode();
  const Scalar p = params.working_p();
  const Scalar one = Scalar::one(mode);
  const Scalar q = one - p;
  const int m = params.m;
  const Scalar mm = scalar_int(m, mode);

  // Transition weights for the standing-urn count k = 0..m-1.
  std::vector<Scalar> up(m, Scalar::zero(mode)), down(m, Scalar::zero(mode)),
      stay(m, Scalar::zero(mode));
  for (int k = 0; k < m; ++k) {
    up[k] = q * scalar_int(m - k, mode) / mm;
    down[k] = p * scalar_int(k, mode) / mm;
    stay[k] = one - up[k] - down[k];
  }

  std::vector<Scalar> v(m, Scalar::zero(mode)), next(m, Scalar::zero(mode));
  v[0] = one;
  Pmf pmf;
  pmf.probs.assign(static_cast<size_t>(n_max) + 1, Scalar::zero(mode));
  pmf.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k < m; ++k) {
      Scalar acc = v[k] * stay[k];
      if (k > 0) acc += v[k - 1] * up[k - 1];
      if (k + 1 < m) acc += v[k + 1] * down[k + 1];
      next[k] = acc;
    }
    pmf.probs[static_cast<size_t>(n)] = v[m - 1] * up[m - 1];
    std::swap(v, next);
  }
  Scalar residual = kahan_sum(v, mode);
  set_tail_fields(pmf, params, residual);
  return pmf;
}

Scalar mean_closed(const ModelParams& params) {
  params.validate();
  const int m = params.m;
  if (params.exact_mode()) {
    const Rational p = params.working_p().rat();
    const Rational q = Rational(1) - p;
    Rational sum(0);
    Rational q_pow(1);
    for (long l = 1; l <= m; ++l) {
      q_pow /= q;
      sum += Rational(1, l) * q_pow;
    }
    return Scalar::exact(Rational(m) * sum);
  }
  const double p = params.p_double();
  const long double r = 1.0L / (1.0L - static_cast<long double>(p));
  long double sum = 0, comp = 0, r_pow = 1;
  for (int l = 1; l <= m; ++l) {
    r_pow *= r;
    const long double term = r_pow / l - comp;
    const long double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
    if (std::isinf(static_cast<double>(sum)) || std::isinf(static_cast<double>(r_pow))) {
      // Dominant behaviour: mean ~ (1-p)^{-m} / p.
      const double log10_mean = (-m * std::log1p(-p) - std::log(p)) / std::log(10.0);
      throw OverflowError("mean_closed: floating overflow", log10_mean);
    }
  }
  return Scalar::floating(static_cast<long double>(m) * sum);
}

Scalar variance_closed(const ModelParams& params) {
  params.validate();
  const int m = params.m;
  if (params.exact_mode()) {
    // Sum of two nonnegative parts. The double sum pairs (1-p)^{-(i+j)}
    // against (1-p)^{-max(i,j)}, which matches the harmonic-sum identity
    // term by term once symmetrized.
    const Rational p = params.working_p().rat();
    const Rational q = Rational(1) - p;
    std::vector<Rational> inv_q_pow(static_cast<size_t>(2 * m) + 1, Rational(1));
    for (size_t l = 1; l < inv_q_pow.size(); ++l) inv_q_pow[l] = inv_q_pow[l - 1] / q;
    Rational first(0);
    for (long i = 1; i <= m; ++i)
      for (long j = 1; j <= m; ++j)
        first += Rational(1, i * j) *
                 (inv_q_pow[static_cast<size_t>(i + j)] -
                  inv_q_pow[static_cast<size_t>(std::max(i, j))]);
    first *= Rational(m) * Rational(m);
    Rational second(0);
    for (long l = 1; l <= m; ++l)
      second += Rational(m, l) * (Rational(m, l) - Rational(1)) *
                inv_q_pow[static_cast<size_t>(l)];
    return Scalar::exact(first + second);
  }
  // Floating route: Var = (mA)^2 - mA - 2 m^2 sum_{l>=2} H_{l-1}/(l (1-p)^l).
  const double p = params.p_double();
  const long double r = 1.0L / (1.0L - static_cast<long double>(p));
  long double a = 0, s2 = 0, h_prev = 0, r_pow = 1;
  for (int l = 1; l <= m; ++l) {
    r_pow *= r;
    a += r_pow / l;
    if (l >= 2) s2 += h_prev * r_pow / l;
    h_prev += 1.0L / l;
    if (std::isinf(static_cast<double>(r_pow))) {
      const double log10_var =
          (-2.0 * m * std::log1p(-p) - 2.0 * std::log(p)) / std::log(10.0);
      throw OverflowError("variance_closed: floating overflow", log10_var);
    }
  }
  const long double mean = static_cast<long double>(m) * a;
  const long double var = mean * mean - mean -
                          2.0L * static_cast<long double>(m) * m * s2;
  if (std::isinf(static_cast<double>(var)))
    throw OverflowError("variance_closed: floating overflow",
                        (-2.0 * m * std::log1p(-p) - 2.0 * std::log(p)) / std::log(10.0));
  return Scalar::floating(var);
}

MomentReport moments_closed(const ModelParams& params) {
  MomentReport r;
  r.method = MomentMethod::closed_form;
  r.mean = mean_closed(params);
  r.variance = variance_closed(params);
  r.second_moment = r.variance + r.mean * r.mean;
  return r;
}

MomentReport moments_from_pmf(const Pmf& pmf) {
  const ScalarMode mode = pmf.mode();
  std::vector<Scalar> first, second;
  first.reserve(pmf.probs.size());
  second.reserve(pmf.probs.size());
  for (size_t n = 0; n < pmf.probs.size(); ++n) {
    const Scalar nn = scalar_int(static_cast<long>(n), mode);
    first.push_back(nn * pmf.probs[n]);
    second.push_back(nn * nn * pmf.probs[n]);
  }
  MomentReport r;
  r.method = MomentMethod::pmf_sum;
  r.mean = kahan_sum(first, mode);
  r.second_moment = kahan_sum(second, mode);
  r.variance = r.second_moment - r.mean * r.mean;
  return r;
}

double mgf_classical(int m, double t) {
  if (m < 1) throw std::domain_error("mgf_classical: m must be >= 1");
  if (t > 0) throw std::domain_error("mgf_classical: t must be <= 0");
  const double nu = m * std::exp(-t);
  const double log_binom =
      std::lgamma(nu + 1.0) - std::lgamma(m + 1.0) - std::lgamma(nu - m + 1.0);
  return std::exp(-log_binom);
}

namespace {

// Integral D(t) = int_0^1 p m (1-p x)^{m-1} (1 - (1-x)^alpha) dx with
// alpha = m (e^{-t} - 1) >= 0, so that the repair factor is
// (1-p)^m / ((1-p)^m + D): both contributions positive, no cancellation.
double repair_factor_log(const ModelParams& params, double t, double rel_tol) {
  const double p = params.p_double();
  const int m = params.m;
  if (p == 0.0) return 0.0;
  const double alpha = m * std::expm1(-t);
  const double log_pm = std::log(p) + std::log(m);
  auto integrand = [&](double x) {
    const double body = (m - 1) * std::log1p(-p * x);
    const double one_minus = -std::expm1(alpha * std::log1p(-x));
    return std::exp(log_pm + body) * one_minus;
  };
  const double d = t == 0.0 ? 0.0 : integrate(integrand, 0.0, 1.0, rel_tol, 1e-300);
  const double log_qm = m * std::log1p(-p);
  const double qm = std::exp(log_qm);
  const double denom = qm + d;
  if (denom <= 0.0) return log_qm - std::log(d > 0 ? d : 1e-300);
  return log_qm - std::log(denom);
}

}  // namespace

double mgf_sum_form(const ModelParams& params, double t) {
  params.validate();
  if (t > 0) throw std::domain_error("mgf_sum_form: t must be <= 0");
  const double p = params.p_double();
  const int m = params.m;
  const double nu = m - m * std::exp(-t);  // <= 0
  long double lambda = 1.0L, term = 1.0L;
  for (int l = 1; l <= m; ++l) {
    term *= static_cast<long double>(l - 1 - nu) /
            (static_cast<long double>(l) * (1.0L - static_cast<long double>(p)));
    lambda += term;
  }
  return static_cast<double>(1.0L / lambda);
}

double mgf_eval(const ModelParams& params, double t, double rel_tol,
                MgfDiagnostics* diag) {
  params.validate();
  if (t > 0) throw std::domain_error("mgf_eval: t must be <= 0");
  const double value =
      std::exp(std::log(mgf_classical(params.m, t)) + repair_factor_log(params, t, rel_tol));
  if (params.m <= 20 && t >= -2.0) {
    const double sum_value = mgf_sum_form(params, t);
    const double rel = std::abs(sum_value - value) / std::max(value, 1e-300);
    if (diag) {
      diag->sum_form_checked = true;
      diag->sum_form_value = sum_value;
      diag->rel_difference = rel;
      diag->mismatch = rel > std::max(1e3 * rel_tol, 1e-7);
    }
  } else if (diag) {
    *diag = MgfDiagnostics{};
  }
  return value;
}

Scalar tail_from_pmf(const Pmf& pmf, int n) {
  if (n > pmf.n_max) throw std::out_of_range("tail_from_pmf: n exceeds n_max");
  const ScalarMode mode = pmf.mode();
  std::vector<Scalar> terms;
  terms.push_back(pmf.tail_mass);
  for (int k = pmf.n_max; k > n; --k) terms.push_back(pmf.probs[static_cast<size_t>(k)]);
  return kahan_sum(terms, mode);
}

double mean_diff_integral(const ModelParams& params, double rel_tol) {
  params.validate();
  const double p = params.p_double();
  const int m = params.m;
  if (p == 0.0) return 0.0;
  const double pm = p * m;
  const double boundary = pm * pm * std::exp((m - 1) * std::log1p(-p));
  double integral = 0.0;
  if (m >= 2) {
    const double coeff = p * p * p * static_cast<double>(m) * m * (m - 1);
    integral = coeff * integrate(
                           [&](double x) {
                             return std::exp((m - 2) * std::log1p(-p * x)) *
                                    collector_L(x);
                           },
                           0.0, 1.0, rel_tol, 1e-300);
  }
  const double log_lead = -m * std::log1p(-p) - std::log(p);
  const double log_value = log_lead + std::log(boundary + integral);
  if (log_value > 700.0)
    throw OverflowError("mean_diff_integral: floating overflow", log_value / std::log(10.0));
  return std::exp(log_value);
}

double second_moment_diff(const ModelParams& params, double rel_tol) {
  params.validate();
  const double p = params.p_double();
  const int m = params.m;
  if (p == 0.0) return 0.0;
  const double e1 = mean_diff_integral(params, rel_tol);
  const double boundary = 2.0 * p * p * static_cast<double>(m) * m * m *
                          std::exp((m - 1) * std::log1p(-p));
  double integral = 0.0;
  if (m >= 2) {
    const double coeff = p * p * p * static_cast<double>(m) * m * m * (m - 1);
    integral = coeff * integrate(
                           [&](double x) {
                             return std::exp((m - 2) * std::log1p(-p * x)) *
                                    collector_N(x);
                           },
                           0.0, 1.0, rel_tol, 1e-300);
  }
  const double xi = std::exp(-m * std::log1p(-p) - std::log(p)) * (boundary + integral);
  return 2.0 * e1 * e1 - e1 + xi;
}

}  // namespace ccc
