#include <doctest.h>

#include <cmath>

#include "ccc/asymptotics.hpp"
#include "ccc/exact.hpp"
#include "oracle_coupled.hpp"

using namespace ccc;

TEST_CASE("pmf of the single-coupon geometric case") {
  const ModelParams params{1, Scalar::exact(Rational(1, 2))};
  const Pmf s = pmf_series(params, 3);
  CHECK(s.probs[0] == Scalar::exact(0));
  CHECK(s.probs[1] == Scalar::exact(1, 2));
  CHECK(s.probs[2] == Scalar::exact(1, 4));
  CHECK(s.probs[3] == Scalar::exact(1, 8));
  const Pmf mk = pmf_markov(params, 3);
  for (int n = 0; n <= 3; ++n) CHECK(mk.probs[n] == s.probs[n]);
  CHECK(mk.tail_mass == Scalar::exact(1, 8));
  CHECK(mk.tail_mass <= mk.tail_certificate);

  const Pmf sure = pmf_markov({1, Scalar::exact(0)}, 1);
  CHECK(sure.probs[1] == Scalar::exact(1));
  CHECK(sure.tail_mass == Scalar::exact(0));
}

TEST_CASE("pmf of two fair coupons") {
  const ModelParams params{2, Scalar::exact(0)};
  const Pmf s = pmf_series(params, 4);
  CHECK(s.probs[2] == Scalar::exact(1, 2));
  CHECK(s.probs[3] == Scalar::exact(1, 4));
  CHECK(s.probs[4] == Scalar::exact(1, 8));
  // Clumsy two-coupon chain: P(T=2) = (1-p)^2 / 2 at p = 1/2.
  const Pmf c = pmf_markov({2, Scalar::exact(Rational(1, 2))}, 4);
  CHECK(c.probs[2] == Scalar::exact(1, 8));
}

TEST_CASE("pmf routes agree on a small grid") {
  for (int m = 1; m <= 3; ++m) {
    for (const Rational& p : {Rational(0), Rational(1, 4), Rational(3, 4)}) {
      const ModelParams params{m, Scalar::exact(p)};
      const Pmf a = pmf_series(params, 60);
      const Pmf b = pmf_markov(params, 60);
      for (int n = 0; n <= 60; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(a.probs[n] == b.probs[n]);
      }
      CHECK(a.tail_mass == b.tail_mass);
      for (int n = 0; n < m; ++n) CHECK(a.probs[n] == Scalar::exact(0));
    }
  }
}

TEST_CASE("pmf preconditions and float-mode agreement") {
  CHECK_THROWS_AS(pmf_markov({3, Scalar::exact(0)}, 2), std::invalid_argument);
  const ModelParams params{4, Scalar::floating(0.6L)};
  const Pmf a = pmf_series(params, 300);
  const Pmf b = pmf_markov(params, 300);
  double worst = 0;
  double total = 0;
  for (int n = 0; n <= 300; ++n) {
    worst = std::max(worst, std::abs(a.probs[n].to_double() - b.probs[n].to_double()));
    total += b.probs[n].to_double();
  }
  CHECK(worst < 1e-12);
  CHECK(total + b.tail_mass.to_double() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed-form moments") {
  CHECK(mean_closed({3, Scalar::exact(0)}) == Scalar::exact(11, 2));
  CHECK(mean_closed({1, Scalar::exact(Rational(1, 2))}) == Scalar::exact(2));
  CHECK(mean_closed({2, Scalar::exact(Rational(1, 2))}) == Scalar::exact(8));
  CHECK(variance_closed({1, Scalar::exact(Rational(1, 2))}) == Scalar::exact(2));
  CHECK(variance_closed({2, Scalar::exact(0)}) == Scalar::exact(2));
  CHECK(variance_closed({1, Scalar::exact(0)}) == Scalar::exact(0));
  // Exact and floating evaluations agree.
  for (int m : {1, 2, 5, 9}) {
    const double ex = mean_closed({m, Scalar::exact(Rational(3, 10))}).to_double();
    const double fl = mean_closed({m, Scalar::floating(0.3L)}).to_double();
    CHECK(fl == doctest::Approx(ex).epsilon(1e-13));
    const double exv = variance_closed({m, Scalar::exact(Rational(3, 10))}).to_double();
    const double flv = variance_closed({m, Scalar::floating(0.3L)}).to_double();
    CHECK(flv == doctest::Approx(exv).epsilon(1e-12));
  }
}

TEST_CASE("closed-form overflow reports a log-domain value") {
  const ModelParams params{4000, Scalar::floating(0.99L)};
  bool threw = false;
  try {
    mean_closed(params);
  } catch (const OverflowError& e) {
    threw = true;
    // log10 of (1-p)^{-m}/p = -m log10(0.01) - log10(0.99) ~ 8000.
    CHECK(e.log10_value == doctest::Approx(8000.0).epsilon(0.01));
  }
  CHECK(threw);
  CHECK_THROWS_AS(variance_closed(params), OverflowError);
}

TEST_CASE("pmf-sum moments approach the closed forms") {
  const ModelParams params{3, Scalar::floating(0.25L)};
  const Pmf pmf = pmf_markov(params, 900);
  const MomentReport viaPmf = moments_from_pmf(pmf);
  const MomentReport closed = moments_closed(params);
  CHECK(viaPmf.mean.to_double() ==
        doctest::Approx(closed.mean.to_double()).epsilon(1e-12));
  CHECK(viaPmf.variance.to_double() ==
        doctest::Approx(closed.variance.to_double()).epsilon(1e-10));
  CHECK(closed.second_moment.to_double() ==
        doctest::Approx(closed.variance.to_double() +
                        closed.mean.to_double() * closed.mean.to_double()));
}

TEST_CASE("classical factor of the MGF") {
  CHECK(mgf_classical(1, -1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(mgf_classical(7, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mgf_classical(2, -std::log(2.0)) == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK_THROWS_AS(mgf_classical(2, 0.5), std::domain_error);
}

TEST_CASE("factored MGF evaluation") {
  CHECK(mgf_eval({5, Scalar::floating(0.3L)}, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mgf_eval({1, Scalar::floating(0.0L)}, -1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
  // Geometric law: (1-p) e^t / (1 - p e^t) at m=1, p=1/2, t=-1.
  const double geo = 0.5 * std::exp(-1.0) / (1 - 0.5 * std::exp(-1.0));
  CHECK(mgf_eval({1, Scalar::floating(0.5L)}, -1.0) == doctest::Approx(geo).epsilon(1e-10));
  CHECK_THROWS_AS(mgf_eval({1, Scalar::floating(0.5L)}, 0.1), std::domain_error);
}

TEST_CASE("alternating-sum route agrees for small m") {
  for (int m : {1, 2, 5, 10, 20}) {
    for (double t : {-2.0, -1.0, -0.1}) {
      const ModelParams params{m, Scalar::floating(0.4L)};
      MgfDiagnostics diag;
      const double v = mgf_eval(params, t, 1e-10, &diag);
      CAPTURE(m);
      CAPTURE(t);
      CHECK(diag.sum_form_checked);
      CHECK_FALSE(diag.mismatch);
      CHECK(mgf_sum_form(params, t) == doctest::Approx(v).epsilon(1e-8));
    }
  }
}

TEST_CASE("tails from the pmf") {
  const Pmf geo = pmf_markov({1, Scalar::exact(Rational(1, 2))}, 40);
  CHECK(tail_from_pmf(geo, 2) == Scalar::exact(1, 4));
  CHECK(tail_from_pmf(geo, 0) == Scalar::exact(1));
  const Pmf two = pmf_markov({2, Scalar::exact(0)}, 50);
  CHECK(tail_from_pmf(two, 1) == Scalar::exact(1));  // n = m-1
  CHECK(tail_from_pmf(two, 3) == Scalar::exact(1, 4));
  CHECK_THROWS_AS(tail_from_pmf(two, 51), std::out_of_range);
}

TEST_CASE("difference mean matches the closed-form gap") {
  CHECK(mean_diff_integral({1, Scalar::floating(0.5L)}) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(mean_diff_integral({2, Scalar::floating(0.5L)}) ==
        doctest::Approx(5.0).epsilon(1e-9));
  CHECK(mean_diff_integral({4, Scalar::floating(0.0L)}) == 0.0);
  // Consistency with mean_closed - m H_m on a grid.
  for (int m : {1, 2, 3, 5, 8}) {
    for (double p : {0.1, 0.35, 0.6}) {
      const ModelParams params{m, Scalar::floating(static_cast<long double>(p))};
      const double gap = mean_closed(params).to_double() - m * harmonic(m);
      CAPTURE(m);
      CAPTURE(p);
      CHECK(mean_diff_integral(params) == doctest::Approx(gap).epsilon(1e-9));
    }
  }
}

TEST_CASE("difference second moment: geometric case and coupled oracle") {
  // m=1, p=1/2: diff = T - 1 with T geometric(1/2);
  // brute series sum_{n>=1} (n-1)^2 2^{-n} evaluates to 3.
  long double brute_sum = 0;
  for (int n = 1; n <= 200; ++n)
    brute_sum += static_cast<long double>(n - 1) * (n - 1) * std::pow(0.5L, n);
  CHECK(static_cast<double>(brute_sum) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(second_moment_diff({1, Scalar::floating(0.5L)}) ==
        doctest::Approx(3.0).epsilon(1e-9));

  // Coupled chain oracle at m=2, p=1/2 (phase-two spectral gap ~ 0.146,
  // so 600 steps leave ~1e-41 of mass).
  const auto law = ccc_test::coupled_diff_law(2, Rational(1, 2), 400, 600);
  CHECK(law.tail.to_double() < 1e-30);
  const double oracle_first = law.truncated_mean().to_double();
  const double oracle_second = law.truncated_second_moment().to_double();
  CHECK(mean_diff_integral({2, Scalar::floating(0.5L)}) ==
        doctest::Approx(oracle_first).epsilon(1e-9));
  CHECK(second_moment_diff({2, Scalar::floating(0.5L)}) ==
        doctest::Approx(oracle_second).epsilon(1e-9));

  // Another point, m=3.
  const auto law3 = ccc_test::coupled_diff_law(3, Rational(1, 4), 600, 800);
  CHECK(law3.tail.to_double() < 1e-30);
  CHECK(mean_diff_integral({3, Scalar::floating(0.25L)}) ==
        doctest::Approx(law3.truncated_mean().to_double()).epsilon(1e-9));
  CHECK(second_moment_diff({3, Scalar::floating(0.25L)}) ==
        doctest::Approx(law3.truncated_second_moment().to_double()).epsilon(1e-9));
}

TEST_CASE("variance split identity") {
  const ModelParams params{3, Scalar::floating(0.2L)};
  const double lhs = variance_closed(params).to_double() - classical_variance(3);
  const double e1 = mean_diff_integral(params);
  const double rhs = second_moment_diff(params) - e1 * e1;
  CHECK(rhs == doctest::Approx(lhs).epsilon(1e-10));
}

TEST_CASE("certificate bounds the residual mass") {
  for (int m : {1, 2, 4}) {
    for (const Rational& p : {Rational(0), Rational(1, 2)}) {
      const Pmf pmf = pmf_markov({m, Scalar::exact(p)}, 80);
      CHECK(pmf.tail_mass <= pmf.tail_certificate);
    }
  }
  // The geometric certificate at m=1 coincides with the true tail.
  const ModelParams one{1, Scalar::exact(Rational(1, 2))};
  const Pmf pmf = pmf_markov(one, 10);
  CHECK(pmf.tail_certificate == Scalar::exact(Rational(1, 2).pow(10)));
}
