#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ccc/asymptotics.hpp"
#include "ccc/ks.hpp"
#include "ccc/rng.hpp"

using namespace ccc;

TEST_CASE("one-sample statistic on stratified quantiles is 1/(2n)") {
  const int n = 100;
  std::vector<double> xs;
  for (int i = 1; i <= n; ++i)
    xs.push_back(gumbel_quantile((i - 0.5) / n));
  std::sort(xs.begin(), xs.end());
  const KsResult r = ks_one_sample(xs, gumbel_cdf, 0.01);
  CHECK(r.statistic == doctest::Approx(1.0 / (2 * n)).epsilon(1e-10));
  CHECK(r.pass);
  CHECK(r.n == n);
}

TEST_CASE("one-sample statistic for a point mass against the gumbel") {
  const std::vector<double> xs = {0.0};
  const KsResult r = ks_one_sample(xs, gumbel_cdf, 0.5);
  CHECK(r.statistic == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
  CHECK_FALSE(r.pass);
  CHECK_THROWS_AS(ks_one_sample({}, gumbel_cdf, 0.5), std::invalid_argument);
}

TEST_CASE("one-sample calibration with i.i.d. gumbel draws") {
  const int n = 10000;
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    RngStream rng(808, static_cast<std::uint64_t>(i));
    xs[static_cast<size_t>(i)] = gumbel_quantile(rng.next_open01());
  }
  std::sort(xs.begin(), xs.end());
  const KsResult r = ks_one_sample(xs, gumbel_cdf, 1.95 / std::sqrt(n));
  CHECK(r.pass);
}

TEST_CASE("two-sample basics") {
  const std::vector<double> a = {1, 2, 3};
  CHECK(ks_two_sample(a, a, 0.1).statistic == 0.0);
  const std::vector<double> zero = {0.0}, one = {1.0};
  CHECK(ks_two_sample(zero, one, 2.0).statistic == doctest::Approx(1.0));
  CHECK_THROWS_AS(ks_two_sample({}, a, 0.1), std::invalid_argument);
}

TEST_CASE("two-sample calibration with exponential batches") {
  const int n = 10000;
  std::vector<double> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    RngStream ra(11, static_cast<std::uint64_t>(i));
    RngStream rb(12, static_cast<std::uint64_t>(i));
    a[static_cast<size_t>(i)] = ra.next_exponential(1.0);
    b[static_cast<size_t>(i)] = rb.next_exponential(1.0);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const KsResult r = ks_two_sample(a, b, 1.95 * std::sqrt(2.0 / n));
  CHECK(r.pass);
  CHECK(r.n == n);
  CHECK(r.n2 == n);
}

TEST_CASE("asymptotic quantile") {
  CHECK(ks_one_sample_quantile(10000, 0.01) == doctest::Approx(1.6276 / 100).epsilon(1e-3));
  CHECK_THROWS_AS(ks_one_sample_quantile(0, 0.01), std::invalid_argument);
}

TEST_CASE("tied samples are handled by the scan") {
  // Empirical CDF with ties: {0,0,0,1}; compare against U(0,1)-style CDF.
  const std::vector<double> xs = {0.0, 0.0, 0.0, 1.0};
  auto cdf = [](double x) { return std::min(1.0, std::max(0.0, x)); };
  // At x=0: F_emp jumps 0 -> 3/4 while F = 0; the gap is 3/4.
  CHECK(ks_one_sample(xs, cdf, 1.0).statistic == doctest::Approx(0.75));
}
