#include "ccc/ks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ccc {

KsResult ks_one_sample(std::span<const double> sorted_samples,
                       const std::function<double(double)>& cdf, double threshold) {
  if (sorted_samples.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
  const auto n = static_cast<std::int64_t>(sorted_samples.size());
  const double dn = static_cast<double>(n);
  double stat = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double f = cdf(sorted_samples[static_cast<size_t>(i)]);
    stat = std::max(stat, std::max((i + 1) / dn - f, f - i / dn));
  }
  return {stat, n, 0, threshold, stat < threshold};
}

KsResult ks_two_sample(std::span<const double> a_sorted,
                       std::span<const double> b_sorted, double threshold) {
  if (a_sorted.empty() || b_sorted.empty())
    throw std::invalid_argument("ks_two_sample: empty sample");
  const auto na = static_cast<std::int64_t>(a_sorted.size());
  const auto nb = static_cast<std::int64_t>(b_sorted.size());
  double stat = 0;
  std::int64_t i = 0, j = 0;
  while (i < na && j < nb) {
    const double x = std::min(a_sorted[static_cast<size_t>(i)],
                              b_sorted[static_cast<size_t>(j)]);
    while (i < na && a_sorted[static_cast<size_t>(i)] <= x) ++i;
    while (j < nb && b_sorted[static_cast<size_t>(j)] <= x) ++j;
    stat = std::max(stat, std::abs(static_cast<double>(i) / na -
                                   static_cast<double>(j) / nb));
  }
  return {stat, na, nb, threshold, stat < threshold};
}

double ks_one_sample_quantile(std::int64_t n, double alpha) {
  if (n < 1) throw std::invalid_argument("ks_one_sample_quantile: n must be >= 1");
  if (!(alpha > 0 && alpha < 1))
    throw std::invalid_argument("ks_one_sample_quantile: alpha must lie in (0,1)");
  return std::sqrt(-std::log(alpha / 2) / 2) / std::sqrt(static_cast<double>(n));
}

}  // namespace ccc
