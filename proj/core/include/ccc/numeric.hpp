#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ccc/rational.hpp"

namespace ccc {

/// Raised by closed-form evaluators whose floating result exceeds the
/// representable range; carries a log10 estimate of the true value.
class OverflowError : public std::range_error {
 public:
  OverflowError(const std::string& what, double log10_value)
      : std::range_error(what), log10_value(log10_value) {}
  double log10_value;
};

double harmonic(int m);        // H_m
double harmonic2(int m);       // H_m^(2)
Rational harmonic_exact(int m);
Rational harmonic2_exact(int m);

/// log |binom(nu, k)| for real nu and integer k >= 0, with the sign of the
/// product nu (nu-1) ... (nu-k+1) / k!. Uses the log-gamma form when all
/// gamma arguments are positive and the O(k) product otherwise.
struct SignedLog {
  double log_abs;
  int sign;  // -1, 0, +1
};
SignedLog log_binomial(double nu, std::int64_t k);
double binomial_real(double nu, std::int64_t k);

/// L(x) = x + (1-x) log(1-x) on [0, 1]; increasing, L(0)=0, L(1)=1.
/// Series evaluation below x = 1e-4 avoids cancellation.
double collector_L(double x);

/// N(x) = (log^2(1-x) - 2 log(1-x) + 2)(x-1) + 2, the antiderivative of
/// log^2(1-x) with N(0)=0, N(1)=2. Series evaluation below x = 0.02.
double collector_N(double x);

/// Upper-tail p-value of a chi-square statistic with `dof` degrees of
/// freedom.
double chi_square_pvalue(double statistic, int dof);

}  // namespace ccc
