#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace ccc {

struct KsResult {
  double statistic = 0;
  std::int64_t n = 0;
  std::int64_t n2 = 0;  // two-sample only
  double threshold = 0;
  bool pass = false;
};

/// sup-distance between the empirical CDF of a sorted sample and F.
KsResult ks_one_sample(std::span<const double> sorted_samples,
                       const std::function<double(double)>& cdf, double threshold);

/// sup-distance between two empirical CDFs, by merge scan.
KsResult ks_two_sample(std::span<const double> a_sorted,
                       std::span<const double> b_sorted, double threshold);

/// Asymptotic one-sample quantile c(alpha)/sqrt(n), c = sqrt(-ln(alpha/2)/2).
double ks_one_sample_quantile(std::int64_t n, double alpha);

}  // namespace ccc
