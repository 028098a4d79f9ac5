#include "ccc/numeric.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

namespace ccc {

double harmonic(int m) {
  double sum = 0, comp = 0;
  for (int l = 1; l <= m; ++l) {
    const double term = 1.0 / l - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
  return sum;
}

double harmonic2(int m) {
  double sum = 0, comp = 0;
  for (int l = 1; l <= m; ++l) {
    const double term = 1.0 / (static_cast<double>(l) * l) - comp;
    const double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
  return sum;
}

Rational harmonic_exact(int m) {
  Rational h(0);
  for (long l = 1; l <= m; ++l) h += Rational(1, l);
  return h;
}

Rational harmonic2_exact(int m) {
  Rational h(0);
  for (long l = 1; l <= m; ++l) h += Rational(1, l) * Rational(1, l);
  return h;
}

SignedLog log_binomial(double nu, std::int64_t k) {
  if (k < 0) throw std::domain_error("log_binomial: k must be >= 0");
  if (k == 0) return {0.0, 1};
  // All gamma arguments positive: binom(nu,k) = G(nu+1)/(G(k+1) G(nu-k+1)).
  if (nu - static_cast<double>(k) + 1.0 > 0.0) {
    const double la = std::lgamma(nu + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                      std::lgamma(nu - static_cast<double>(k) + 1.0);
    return {la, 1};
  }
  double log_abs = -std::lgamma(static_cast<double>(k) + 1.0);
  int sign = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    const double factor = nu - static_cast<double>(j);
    if (factor == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    log_abs += std::log(std::abs(factor));
    if (factor < 0) sign = -sign;
  }
  return {log_abs, sign};
}

double binomial_real(double nu, std::int64_t k) {
  const SignedLog b = log_binomial(nu, k);
  return b.sign * std::exp(b.log_abs);
}

double collector_L(double x) {
  if (x >= 1.0) return 1.0;
  if (x < 1e-4) {
    // L(x) = sum_{k>=2} x^k / (k (k-1))
    double term = x * x, sum = 0;
    for (int k = 2; k <= 8; ++k) {
      sum += term / (static_cast<double>(k) * (k - 1));
      term *= x;
    }
    return sum;
  }
  return x + (1.0 - x) * std::log1p(-x);
}

double collector_N(double x) {
  if (x >= 1.0) return 2.0;
  if (x < 0.02) {
    // N(x) = sum_{n>=2} 2 H_{n-1} x^{n+1} / (n (n+1))
    double sum = 0, h = 0, xn = x * x * x;
    for (int n = 2; n <= 14; ++n) {
      h += 1.0 / (n - 1);
      sum += 2.0 * h * xn / (static_cast<double>(n) * (n + 1));
      xn *= x;
    }
    return sum;
  }
  const double u = std::log1p(-x);
  return (u * u - 2.0 * u + 2.0) * (x - 1.0) + 2.0;
}

double chi_square_pvalue(double statistic, int dof) {
  if (dof < 1) throw std::domain_error("chi_square_pvalue: dof must be >= 1");
  if (statistic <= 0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

}  // namespace ccc
