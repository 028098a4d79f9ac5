#include "ccc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "ccc/asymptotics.hpp"
#include "ccc/brute.hpp"
#include "ccc/exact.hpp"
#include "ccc/ks.hpp"
#include "ccc/numeric.hpp"
#include "ccc/series.hpp"
#include "ccc/simulate.hpp"
#include "ccc/version.hpp"

namespace ccc {

namespace {

// Disjoint stream blocks per experiment within one suite run.
constexpr std::uint64_t kStreamBlock = std::uint64_t{1} << 40;

struct SuiteBuilder {
  Report report;
  const SuiteConfig& config;

  explicit SuiteBuilder(Suite suite, const SuiteConfig& cfg) : config(cfg) {
    report.suite = to_string(suite);
    report.version = kVersion;
    report.seed = cfg.seed;
  }

  std::int64_t scaled(std::int64_t n) const {
    const auto s = static_cast<std::int64_t>(std::llround(n * config.n_scale));
    return std::max<std::int64_t>(200, s);
  }

  void close(double expected, double observed, double tol, std::string id,
             std::string note = "") {
    const bool pass = std::abs(observed - expected) <= tol;
    report.checks.push_back({std::move(id), expected, observed, tol, pass, std::move(note)});
  }

  void below(double observed, double threshold, std::string id, std::string note = "") {
    report.checks.push_back(
        {std::move(id), 0.0, observed, threshold, observed < threshold, std::move(note)});
  }

  void at_most(double observed, double bound, std::string id, std::string note = "") {
    report.checks.push_back(
        {std::move(id), 0.0, observed, bound, observed <= bound, std::move(note)});
  }

  void boolean(bool pass, double observed, std::string id, std::string note = "") {
    report.checks.push_back({std::move(id), 1.0, observed, 0.0, pass, std::move(note)});
  }

  void guarded(const std::string& id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report.checks.push_back({id + "/error", 0.0, 0.0, 0.0, false, e.what()});
    }
  }
};

std::string point_id(const char* prefix, int m, const std::string& p) {
  std::ostringstream s;
  s << prefix << "/m=" << m << ",p=" << p;
  return s.str();
}

// ---------------------------------------------------------------------------
// oracle: two pmf routes agree; enumeration validates the series calculus.

void suite_oracle(SuiteBuilder& b) {
  const int n_max = 200;
  const std::vector<Rational> ps = {Rational(0), Rational(1, 4), Rational(1, 2),
                                    Rational(3, 4)};
  for (int m = 1; m <= 6; ++m) {
    for (const Rational& p : ps) {
      const std::string pid = p.str();
      b.guarded(point_id("pmf-equal/exact", m, pid), [&] {
        const ModelParams params{m, Scalar::exact(p)};
        const Pmf a = pmf_series(params, n_max);
        const Pmf c = pmf_markov(params, n_max);
        long mismatches = 0;
        for (int n = 0; n <= n_max; ++n)
          if (!(a.probs[static_cast<size_t>(n)] == c.probs[static_cast<size_t>(n)]))
            ++mismatches;
        if (!(a.tail_mass == c.tail_mass)) ++mismatches;
        b.close(0, static_cast<double>(mismatches), 0, point_id("pmf-equal/exact", m, pid));
      });
      b.guarded(point_id("pmf-equal/float", m, pid), [&] {
        const ModelParams params{m, Scalar::floating(static_cast<long double>(p.to_double()))};
        const Pmf a = pmf_series(params, n_max);
        const Pmf c = pmf_markov(params, n_max);
        double worst = 0;
        for (int n = 0; n <= n_max; ++n)
          worst = std::max(worst, std::abs(a.probs[static_cast<size_t>(n)].to_double() -
                                           c.probs[static_cast<size_t>(n)].to_double()));
        b.at_most(worst, 1e-12, point_id("pmf-equal/float", m, pid));
      });
    }
  }

  // Exhaustive enumeration against the closed-form series, words to length 6.
  const int len = 6;
  for (int m = 1; m <= 2; ++m) {
    for (const Rational& p : {Rational(0), Rational(1, 4), Rational(1, 2)}) {
      const std::string pid = p.str();
      b.guarded(point_id("langgf/brute", m, pid), [&] {
        const ModelParams params{m, Scalar::exact(p)};
        const brute::HgjWeights w = brute::enumerate_hgj(m, p, len);
        const FormalSeries sh = ogf_H(params).expand(len);
        const FormalSeries sg = ogf_G(params).expand(len);
        const FormalSeries sj =
            RationalGF::divide(ogf_H(params), ogf_G(params)).expand(len);
        long bad_h = 0, bad_g = 0, bad_j = 0;
        for (int n = 0; n <= len; ++n) {
          if (!(sh[n] == Scalar::exact(w.h[static_cast<size_t>(n)]))) ++bad_h;
          if (!(sg[n] == Scalar::exact(w.g[static_cast<size_t>(n)]))) ++bad_g;
          if (!(sj[n] == Scalar::exact(w.j[static_cast<size_t>(n)]))) ++bad_j;
        }
        b.close(0, static_cast<double>(bad_h), 0, point_id("langgf/brute-ogf-h", m, pid));
        b.close(0, static_cast<double>(bad_g), 0, point_id("langgf/brute-ogf-g", m, pid));
        b.close(0, static_cast<double>(bad_j), 0, point_id("langgf/brute-pgf-j", m, pid));
      });
    }
  }

  b.guarded("langgf/shuffle-combinator", [&] {
    const Rational p(3, 10);
    const int m = 2;
    const ModelParams params{m, Scalar::exact(p)};
    const std::vector<std::pair<PrimitiveLangSpec, PrimitiveLangSpec>> cases = {
        {{LetterClass::collect, m, params.p, 0, ThresholdDirection::at_or_above},
         {LetterClass::drop, m, params.p, 1, ThresholdDirection::at_or_above}},
        {{LetterClass::collect, m, params.p, 2, ThresholdDirection::below},
         {LetterClass::drop, m, params.p, 2, ThresholdDirection::at_or_above}},
        {{LetterClass::collect, m, params.p, 1, ThresholdDirection::at_or_above},
         {LetterClass::collect, m, params.p, 3, ThresholdDirection::below}},
    };
    int idx = 0;
    for (const auto& [sa, sb] : cases) {
      const int type_b = sa.letter_class == sb.letter_class ? 1 : 0;
      const auto expected = brute::enumerate_shuffle_egf(m, p, sa, 0, sb, type_b, 6);
      const FormalSeries got =
          combine(CombineOp::shuffle, primitive_egf(sa, 6), primitive_egf(sb, 6));
      long bad = 0;
      for (int n = 0; n <= 6; ++n)
        if (!(got[n] == Scalar::exact(expected[static_cast<size_t>(n)]))) ++bad;
      b.close(0, static_cast<double>(bad), 0,
              "langgf/shuffle-combinator/case=" + std::to_string(idx++));
    }
  });

  b.guarded("langgf/factorisation", [&] {
    for (int m = 1; m <= 2; ++m) {
      const ModelParams params{m, Scalar::exact(Rational(1, 4))};
      const FormalSeries sh = ogf_H(params).expand(8);
      const FormalSeries sg = ogf_G(params).expand(8);
      const FormalSeries sj = series_divide(sh, sg);
      const FormalSeries product = combine(CombineOp::concat, sj, sg);
      long bad = 0;
      for (int n = 0; n <= 8; ++n)
        if (!(product[n] == sh[n])) ++bad;
      b.close(0, static_cast<double>(bad), 0,
              "langgf/factorisation/m=" + std::to_string(m));
    }
  });

  for (int m = 1; m <= 3; ++m) {
    for (double pd : {0.0, 0.3}) {
      for (double x : {0.1, 0.5, 0.9}) {
        std::ostringstream id;
        id << "langgf/laplace-borel/m=" << m << ",p=" << pd << ",x=" << x;
        b.guarded(id.str(), [&] {
          const ModelParams params{m, Scalar::floating(static_cast<long double>(pd))};
          const double q = 1.0 - pd;
          auto egf_h = [&](double u) {
            return std::pow(q, m) * std::pow(std::expm1(u / m), m);
          };
          auto egf_g = [&](double u) {
            return std::pow(q * std::expm1(u / m) + 1.0, m);
          };
          const Scalar xs = Scalar::floating(static_cast<long double>(x));
          const double h_direct = ogf_H(params).evaluate(xs).to_double();
          const double g_direct = ogf_G(params).evaluate(xs).to_double();
          const double h_lb = laplace_borel(egf_h, x, 1e-10);
          const double g_lb = laplace_borel(egf_g, x, 1e-10);
          b.at_most(std::abs(h_lb - h_direct) / std::abs(h_direct), 1e-8, id.str() + "/h");
          b.at_most(std::abs(g_lb - g_direct) / std::abs(g_direct), 1e-8, id.str() + "/g");
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// moments: closed forms, pmf sums, factorized MGF, fixed-p expansions.

void suite_moments(SuiteBuilder& b) {
  b.guarded("moment-closed", [&] {
    b.boolean(mean_closed({3, Scalar::exact(0)}) == Scalar::exact(Rational(11, 2)),
              mean_closed({3, Scalar::exact(0)}).to_double(), "moment-closed/mean/m=3,p=0");
    b.boolean(mean_closed({2, Scalar::exact(Rational(1, 2))}) == Scalar::exact(8),
              mean_closed({2, Scalar::exact(Rational(1, 2))}).to_double(),
              "moment-closed/mean/m=2,p=1/2");
    b.boolean(variance_closed({1, Scalar::exact(Rational(1, 2))}) == Scalar::exact(2),
              variance_closed({1, Scalar::exact(Rational(1, 2))}).to_double(),
              "moment-closed/variance/m=1,p=1/2");
    b.boolean(variance_closed({2, Scalar::exact(0)}) == Scalar::exact(2),
              variance_closed({2, Scalar::exact(0)}).to_double(),
              "moment-closed/variance/m=2,p=0");
  });

  // Truncated pmf sums against closed forms within the certified allowance
  // plus the floating-mode normalisation tolerance.
  for (int m = 1; m <= 6; ++m) {
    for (double pd : {0.0, 0.25, 0.5, 0.75}) {
      std::ostringstream id;
      id << "moment-pmfsum/m=" << m << ",p=" << pd;
      b.guarded(id.str(), [&] {
        const ModelParams params{m, Scalar::floating(static_cast<long double>(pd))};
        const double mean = mean_closed(params).to_double();
        const double var = variance_closed(params).to_double();
        const int n_max = static_cast<int>(
            std::min(2.0e6, std::max(200.0, std::ceil(30.0 * mean + 10.0 * std::sqrt(var)))));
        const Pmf pmf = pmf_markov(params, n_max);
        const MomentReport mc = moments_from_pmf(pmf);
        const double cert = pmf.tail_certificate.to_double();
        const double tol_mean = n_max * cert + 1e-12 * (1.0 + std::abs(mean));
        b.close(mean, mc.mean.to_double(), tol_mean, id.str() + "/mean",
                "n_max=" + std::to_string(n_max));
        const double tol_var =
            static_cast<double>(n_max) * n_max * cert + 1e-9 * (1.0 + var + mean * mean);
        b.close(var, mc.variance.to_double(), tol_var, id.str() + "/variance");
      });
    }
  }

  // Factorisation of the MGF into classical and repair parts.
  for (int m = 1; m <= 10; ++m) {
    for (double pd : {0.1, 0.5}) {
      for (double t : {-2.0, -1.0, -0.1}) {
        std::ostringstream id;
        id << "mgf-factor/m=" << m << ",p=" << pd << ",t=" << t;
        b.guarded(id.str(), [&] {
          const ModelParams params{m, Scalar::floating(static_cast<long double>(pd))};
          const double whole = mgf_eval(params, t);
          const double product = mgf_classical(m, t) * I_extra(params, t);
          b.at_most(std::abs(whole - product) / whole, 1e-9, id.str());
        });
      }
    }
  }

  // Alternating-sum route agrees where it is numerically trustworthy.
  for (int m : {1, 2, 5, 10, 20}) {
    for (double t : {-1.0, -0.1}) {
      std::ostringstream id;
      id << "mgf-sumform/m=" << m << ",t=" << t;
      b.guarded(id.str(), [&] {
        const ModelParams params{m, Scalar::floating(0.3L)};
        MgfDiagnostics diag;
        const double whole = mgf_eval(params, t, 1e-10, &diag);
        const double rel = std::abs(diag.sum_form_value - whole) / whole;
        b.boolean(diag.sum_form_checked && !diag.mismatch, rel, id.str(),
                  "factored vs alternating-sum");
      });
    }
  }

  b.guarded("moment-monotone", [&] {
    double min_step_mean = 1e300, min_step_var = 1e300;
    double prev_mean = 0, prev_var = 0;
    for (int m = 1; m <= 20; ++m) {
      const ModelParams params{m, Scalar::floating(0.3L)};
      const double mean = mean_closed(params).to_double();
      const double var = variance_closed(params).to_double();
      if (m > 1) {
        min_step_mean = std::min(min_step_mean, mean - prev_mean);
        min_step_var = std::min(min_step_var, var - prev_var);
      }
      prev_mean = mean;
      prev_var = var;
    }
    b.boolean(min_step_mean > 0, min_step_mean, "moment-monotone/mean-in-m");
    b.boolean(min_step_var > 0, min_step_var, "moment-monotone/variance-in-m");

    min_step_mean = min_step_var = 1e300;
    std::vector<double> means, vars;
    for (int i = 0; i <= 9; ++i) {
      const ModelParams params{7, Scalar::floating(static_cast<long double>(i) / 10)};
      means.push_back(mean_closed(params).to_double());
      vars.push_back(variance_closed(params).to_double());
      if (i > 0) {
        min_step_mean = std::min(min_step_mean, means[i] - means[i - 1]);
        min_step_var = std::min(min_step_var, vars[i] - vars[i - 1]);
      }
    }
    b.boolean(min_step_mean > 0, min_step_mean, "moment-monotone/mean-in-p");
    b.boolean(min_step_var > 0, min_step_var, "moment-monotone/variance-in-p");

    double min_second_mean = 1e300, min_second_var = 1e300;
    for (size_t i = 2; i < means.size(); ++i) {
      min_second_mean =
          std::min(min_second_mean, means[i] - 2 * means[i - 1] + means[i - 2]);
      min_second_var = std::min(min_second_var, vars[i] - 2 * vars[i - 1] + vars[i - 2]);
    }
    b.boolean(min_second_mean >= -1e-9 * std::abs(means.back()), min_second_mean,
              "moment-convex/mean-in-p");
    b.boolean(min_second_var >= -1e-9 * std::abs(vars.back()), min_second_var,
              "moment-convex/variance-in-p");
  });

  // Fixed-p correction series: the scaled residual must stay bounded.
  // Bounds are recorded constants from exact-arithmetic convergence runs.
  struct FixedPCase {
    Rational p;
    double mean_bound, var_bound;
  };
  for (const FixedPCase& fc :
       {FixedPCase{Rational(1, 2), 40.0, 80.0}, FixedPCase{Rational(3, 10), 300.0, 700.0}}) {
    const std::string pid = fc.p.str();
    b.guarded("fixedp-series/p=" + pid, [&] {
      const double pd = fc.p.to_double();
      const FixedPSeries ms = fixed_p_mean_series(pd);
      const FixedPSeries vs = fixed_p_variance_series(pd);
      double worst_mean = 0, worst_var = 0;
      for (int m : {10, 15, 20, 25}) {
        const ModelParams params{m, Scalar::exact(fc.p)};
        const Rational mean = mean_closed(params).rat();
        const Rational var = variance_closed(params).rat();
        const Rational hm = harmonic_exact(m);
        const Rational var0 = Rational(m) * Rational(m) * harmonic2_exact(m) -
                              Rational(m) * hm;
        const Rational q = Rational(1) - fc.p;
        const Rational mean_bracket = (mean - Rational(m) * hm) * fc.p * q.pow(m);
        const Rational var_bracket = (var - var0) * fc.p * fc.p * q.pow(2 * m);
        const double md = m;
        const double mean_resid =
            (mean_bracket.to_double() - 1.0 - ms.a1 / md - ms.a2 / (md * md)) * md * md * md;
        const double var_resid =
            (var_bracket.to_double() - 1.0 - vs.a1 / md - vs.a2 / (md * md)) * md * md * md;
        worst_mean = std::max(worst_mean, std::abs(mean_resid));
        worst_var = std::max(worst_var, std::abs(var_resid));
      }
      b.at_most(worst_mean, fc.mean_bound, "fixedp-series/mean/p=" + pid,
                "scaled residual m^3 (bounded => O(m^-3) remainder)");
      b.at_most(worst_var, fc.var_bound, "fixedp-series/variance/p=" + pid);
    });
  }

  // Regime expansions against closed forms away from the fixed-p case.
  b.guarded("asymptotic-regimes", [&] {
    {
      const int m = 500;
      const double p = 0.1 / (static_cast<double>(m) * m);
      const ModelParams params{m, Scalar::floating(static_cast<long double>(p))};
      const double closed = mean_closed(params).to_double();
      const double expanded = mean_asymptotic(params, Regime::subcritical());
      b.at_most(std::abs(closed - expanded) / closed, 1e-6,
                "asymptotic-regimes/mean/subcritical");
      const double vc = variance_closed(params).to_double();
      const double ve = variance_asymptotic(params, Regime::subcritical());
      b.at_most(std::abs(vc - ve) / vc, 1e-6, "asymptotic-regimes/variance/subcritical");
    }
    {
      double prev_mean_gap = 1e300, prev_var_gap = 1e300;
      bool shrinking = true;
      for (int m : {200, 2000}) {
        const ModelParams params{m, Scalar::floating(1.0L / m)};
        const double mean_gap = std::abs(mean_closed(params).to_double() -
                                         mean_asymptotic(params, Regime::critical(1.0))) /
                                m;
        const double var_gap =
            std::abs(variance_closed(params).to_double() -
                     variance_asymptotic(params, Regime::critical(1.0))) /
            (static_cast<double>(m) * m);
        if (!(mean_gap < prev_mean_gap && var_gap < prev_var_gap)) shrinking = false;
        prev_mean_gap = mean_gap;
        prev_var_gap = var_gap;
      }
      b.at_most(prev_mean_gap, 0.005, "asymptotic-regimes/mean/critical",
                "O(1/m) remainder, recorded constant");
      b.at_most(prev_var_gap, 0.02, "asymptotic-regimes/variance/critical");
      b.boolean(shrinking, prev_mean_gap, "asymptotic-regimes/critical-shrinks");
    }
    {
      const int m = 60;
      const ModelParams params{m, Scalar::floating(0.3L)};
      const double lead = std::exp(-m * std::log1p(-0.3)) / 0.3;
      const double closed = mean_closed(params).to_double();
      const double expanded = mean_asymptotic(params, Regime::supercritical());
      b.at_most(std::abs(closed - expanded) / lead, 0.12,
                "asymptotic-regimes/mean/supercritical", "O(1/(pm)) remainder");
      const double lead2 = std::exp(-2.0 * m * std::log1p(-0.3)) / 0.09;
      const double vc = variance_closed(params).to_double();
      const double ve = variance_asymptotic(params, Regime::supercritical());
      b.at_most(std::abs(vc - ve) / lead2, 0.25,
                "asymptotic-regimes/variance/supercritical");
    }
  });

  b.guarded("pgf-normalization", [&] {
    const ModelParams params{2, Scalar::exact(Rational(1, 4))};
    double prev_cert = 2.0;
    double prev_gap = 2.0;
    bool decays = true, approaches_one = true, conserved = true;
    for (int n_max : {50, 100, 200}) {
      const Pmf pmf = pmf_markov(params, n_max);
      Scalar cum = Scalar::exact(0);
      for (const Scalar& q : pmf.probs) cum += q;
      if (!(cum + pmf.tail_mass == Scalar::one(ScalarMode::exact))) conserved = false;
      const double gap = pmf.tail_mass.to_double();
      if (!(gap < prev_gap)) approaches_one = false;
      prev_gap = gap;
      const double cert = pmf.tail_certificate.to_double();
      if (!(cert < prev_cert)) decays = false;
      prev_cert = cert;
    }
    b.boolean(conserved && approaches_one, prev_gap, "pgf-normalization/partial-sums",
              "mass conserved exactly; partial sums approach 1");
    b.boolean(decays, prev_cert, "pgf-normalization/certificate-decay");
  });
}

// ---------------------------------------------------------------------------
// subcritical: Gumbel limit of the rescaled collection time.

void suite_subcritical(SuiteBuilder& b) {
  b.guarded("gumbel-limit/ks", [&] {
    const int m = 2000;
    const ModelParams params{m, Scalar::floating(1e-7L)};
    const std::int64_t n = b.scaled(10000);
    const BatchResult batch =
        simulate_batch(params, n, b.config.seed, true, b.config.threads, 0);
    const std::vector<double> rescaled = rescale(batch.clumsy.sorted_samples, m, 1e-7,
                                                 Regime::subcritical());
    const KsResult ks = ks_one_sample(rescaled, gumbel_cdf, 0.05);
    b.below(ks.statistic, ks.threshold, "gumbel-limit/ks/m=2000",
            "n=" + std::to_string(n));
  });

  b.guarded("gumbel-limit/classical-mgf", [&] {
    const double target = gumbel_mgf(-1.0);
    b.at_most(std::abs(classical_mgf_limit_check(1000000, -1.0) - target), 1e-3,
              "gumbel-limit/classical-mgf/m=1e6");
    double prev = 1e300;
    bool monotone = true;
    for (int k = 2; k <= 6; ++k) {
      const int m = static_cast<int>(std::pow(10, k));
      const double err = std::abs(classical_mgf_limit_check(m, -1.0) - target);
      if (!(err < prev)) monotone = false;
      prev = err;
    }
    b.boolean(monotone, prev, "gumbel-limit/classical-mgf-monotone");
  });
}

// ---------------------------------------------------------------------------
// supercritical: exponential limit of the rescaled collection time.

void suite_supercritical(SuiteBuilder& b) {
  b.guarded("exp-limit/ks", [&] {
    const int m = 40;
    const double p = 0.25;
    const ModelParams params{m, Scalar::floating(0.25L)};
    const std::int64_t n = b.scaled(2000);
    const BatchResult batch =
        simulate_batch(params, n, b.config.seed, true, b.config.threads, 0);
    const std::vector<double> rescaled =
        rescale(batch.clumsy.sorted_samples, m, p, Regime::supercritical());
    const KsResult ks =
        ks_one_sample(rescaled, [](double x) { return x > 0 ? -std::expm1(-x) : 0.0; }, 0.06);
    // Finite-m location bias of the scaled law, from the closed-form mean.
    const double scaled_mean =
        (mean_closed(params).to_double() - m * harmonic(m)) * p *
        std::exp(m * std::log1p(-p));
    b.below(ks.statistic, ks.threshold, "exp-limit/ks/m=40,p=0.25",
            "population scaled mean = " + format_double(scaled_mean) +
                " vs limit 1 (finite-m bias), n=" + std::to_string(n));
  });
}

// ---------------------------------------------------------------------------
// critical: G + tau limit, tau Laplace transform, repair-factor limit.

void suite_critical(SuiteBuilder& b) {
  b.guarded("critical-limit/ks2", [&] {
    const int m = 1000;
    const ModelParams params{m, Scalar::floating(0.001L)};
    const std::int64_t n = b.scaled(10000);
    const BatchResult batch =
        simulate_batch(params, n, b.config.seed, true, b.config.threads, 0);
    const std::vector<double> lhs =
        rescale(batch.clumsy.sorted_samples, m, 0.001, Regime::critical(1.0));
    const SampleSummary rhs = sample_limit_law(Regime::critical(1.0), n, b.config.seed,
                                               b.config.threads, kStreamBlock);
    const KsResult ks = ks_two_sample(lhs, rhs.sorted_samples, 0.05);
    b.below(ks.statistic, ks.threshold, "critical-limit/ks2/m=1000,c=1",
            "n=" + std::to_string(n) + " per side");

    for (double t : {-0.5, -1.0}) {
      double sum = 0, sumsq = 0;
      for (double x : lhs) {
        const double e = std::exp(t * x);
        sum += e;
        sumsq += e * e;
      }
      const double nn = static_cast<double>(lhs.size());
      const double mean = sum / nn;
      const double se = std::sqrt((sumsq / nn - mean * mean) / nn);
      const double target = critical_limit_mgf(1.0, t);
      b.close(target, mean, 4 * se, "critical-limit/mgf-mc/t=" + format_double(t),
              "4 MC standard errors");
    }
  });

  b.guarded("tau-laplace/analytic", [&] {
    b.close(0.5819767, tau_c_laplace(1.0, 1.0), 1e-6, "tau-laplace/analytic/c=1,s=1");
    double prev = 1.1;
    bool decreasing = true;
    bool in_range = true;
    for (double s : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double v = tau_c_laplace(1.0, s);
      if (!(v <= prev)) decreasing = false;
      if (!(v > 0 && v <= 1.0 + 1e-12)) in_range = false;
      prev = v;
    }
    b.boolean(decreasing && in_range, prev, "tau-laplace/monotone/c=1");
    b.close(1.0, tau_c_laplace(1.0, 0.0), 1e-10, "tau-laplace/normalization");
  });

  b.guarded("tau-laplace/mc", [&] {
    int block = 2;
    for (double c : {0.5, 1.0, 2.0}) {
      const std::int64_t n = b.scaled(100000);
      std::vector<double> taus(static_cast<size_t>(n));
      for (std::int64_t i = 0; i < n; ++i) {
        RngStream rng(b.config.seed, kStreamBlock * block + static_cast<std::uint64_t>(i));
        taus[static_cast<size_t>(i)] = simulate_tau_c({c, std::nullopt}, rng);
      }
      ++block;
      for (double s : {0.5, 1.0, 2.0}) {
        double sum = 0, sumsq = 0;
        for (double tau : taus) {
          const double e = std::exp(-s * tau);
          sum += e;
          sumsq += e * e;
        }
        const double nn = static_cast<double>(n);
        const double mean = sum / nn;
        const double se = std::sqrt((sumsq / nn - mean * mean) / nn);
        std::ostringstream id;
        id << "tau-laplace/mc/c=" << c << ",s=" << s;
        b.close(tau_c_laplace(c, s), mean, 4 * se, id.str());
      }
    }
  });

  b.guarded("critical-limit/iextra-converge", [&] {
    for (double c : {0.5, 1.0, 2.0}) {
      for (double t : {-0.5, -1.0}) {
        const double target = tau_c_laplace(c, -t);
        double prev = 1e300;
        bool decreasing = true;
        double last = 0;
        for (int m : {100, 1000, 10000}) {
          const ModelParams params{m, Scalar::floating(static_cast<long double>(c / m))};
          last = std::abs(I_extra(params, t / m) - target);
          if (!(last < prev)) decreasing = false;
          prev = last;
        }
        std::ostringstream id;
        id << "critical-limit/iextra-converge/c=" << c << ",t=" << t;
        b.boolean(decreasing, last, id.str(), "repair factor approaches tau transform");
      }
    }
  });
}

// ---------------------------------------------------------------------------
// tail: the moment bound dominates the exact tail everywhere on the grid.

void suite_tail(SuiteBuilder& b) {
  int violations = 0;
  double worst_margin = 1e300;
  for (int m = 1; m <= 5; ++m) {
    for (double pd : {0.1, 0.5}) {
      const ModelParams params{m, Scalar::floating(static_cast<long double>(pd))};
      const Pmf pmf = pmf_markov(params, std::max(200, 12 * m));
      for (double factor : {1.0, 2.0, 10.0}) {
        const double r = factor * m;
        const int n = static_cast<int>(std::ceil(r)) - 1;  // P(T >= r) = P(T > n)
        b.guarded("tail-bound/dominates", [&] {
          const double exact_tail = tail_from_pmf(pmf, n).to_double();
          const double bound = tail_bound(params, r);
          if (exact_tail > bound) ++violations;
          worst_margin = std::min(worst_margin, bound - exact_tail);
        });
      }
    }
  }
  b.close(0, violations, 0, "tail-bound/dominates",
          "worst margin " + format_double(worst_margin));

  b.guarded("tail-bound/limits", [&] {
    const ModelParams params{3, Scalar::floating(0.1L)};
    b.at_most(tail_bound(params, 1e9), 1e-6, "tail-bound/limit-zero",
              "bound vanishes as r grows");
    const ModelParams degenerate{1, Scalar::floating(1e-12L)};
    b.close(2.0 * (1.0 - std::exp(-1.0)), tail_bound(degenerate, 1.0), 1e-9,
            "tail-bound/weak-example/m=1");
  });
}

// ---------------------------------------------------------------------------
// independence: the classical time and the repair overshoot decouple.

void suite_independence(SuiteBuilder& b) {
  b.guarded("independence", [&] {
    const ModelParams params{2, Scalar::floating(0.3L)};
    const std::int64_t n = b.scaled(100000);
    const BatchResult batch =
        simulate_batch(params, n, b.config.seed, true, b.config.threads, 0);

    // Correlation needs paired samples; rerun the streams cheaply.
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    std::vector<double> t0(static_cast<size_t>(n)), dd(static_cast<size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      RngStream rng(b.config.seed, static_cast<std::uint64_t>(i));
      const CoupledSample s = simulate_coupled(params, rng);
      const double x = static_cast<double>(s.t_classical);
      const double y = static_cast<double>(s.t_clumsy - s.t_classical);
      t0[static_cast<size_t>(i)] = x;
      dd[static_cast<size_t>(i)] = y;
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
    }
    const double nn = static_cast<double>(n);
    const double cov = sxy / nn - (sx / nn) * (sy / nn);
    const double vx = sxx / nn - (sx / nn) * (sx / nn);
    const double vy = syy / nn - (sy / nn) * (sy / nn);
    const double corr = cov / std::sqrt(vx * vy);
    b.below(std::abs(corr), 4.0 / std::sqrt(nn), "independence/corr/m=2,p=0.3");

    // Pearson test on a pre-registered joint table.
    const std::vector<double> t0_edges = {2.5, 3.5, 4.5, 6.5, 9.5};
    const std::vector<double> dd_edges = {0.5, 1.5, 2.5, 5.5, 9.5};
    const size_t rows = t0_edges.size() + 1, cols = dd_edges.size() + 1;
    std::vector<double> table(rows * cols, 0.0);
    auto bucket = [](const std::vector<double>& edges, double v) {
      size_t k = 0;
      while (k < edges.size() && v > edges[k]) ++k;
      return k;
    };
    for (std::int64_t i = 0; i < n; ++i)
      table[bucket(t0_edges, t0[static_cast<size_t>(i)]) * cols +
            bucket(dd_edges, dd[static_cast<size_t>(i)])] += 1.0;
    std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) {
        row_sum[r] += table[r * cols + c];
        col_sum[c] += table[r * cols + c];
      }
    double stat = 0;
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) {
        const double expected = row_sum[r] * col_sum[c] / nn;
        if (expected > 0) {
          const double d = table[r * cols + c] - expected;
          stat += d * d / expected;
        }
      }
    const int dof = static_cast<int>((rows - 1) * (cols - 1));
    const double pvalue = chi_square_pvalue(stat, dof);
    b.boolean(pvalue > 1e-3, pvalue, "independence/chisq/m=2,p=0.3",
              "stat=" + format_double(stat) + ", dof=" + std::to_string(dof));

    // Variance decomposition within a combined four-standard-error band.
    auto var_se = [](const std::vector<double>& xs) {
      double mean = 0;
      for (double x : xs) mean += x;
      mean /= static_cast<double>(xs.size());
      double m2 = 0, m4 = 0;
      for (double x : xs) {
        const double d = x - mean;
        m2 += d * d;
        m4 += d * d * d * d;
      }
      m2 /= static_cast<double>(xs.size());
      m4 /= static_cast<double>(xs.size());
      return std::sqrt(std::max(0.0, m4 - m2 * m2) / static_cast<double>(xs.size()));
    };
    const double var_p = batch.clumsy.variance();
    const double var_0 = batch.classical.variance();
    const double var_d = batch.difference.variance();
    std::vector<double> tp(static_cast<size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
      tp[static_cast<size_t>(i)] = t0[static_cast<size_t>(i)] + dd[static_cast<size_t>(i)];
    const double band = 4.0 * std::sqrt(var_se(tp) * var_se(tp) + var_se(t0) * var_se(t0) +
                                        var_se(dd) * var_se(dd));
    b.close(0.0, var_p - var_0 - var_d, band, "independence/var-decomp/m=2,p=0.3",
            "Var(T_p) vs Var(T_0) + Var(diff)");
  });

  b.guarded("independence/exact-identity", [&] {
    const ModelParams params{3, Scalar::floating(0.2L)};
    const double lhs = variance_closed(params).to_double() - classical_variance(3);
    const double e1 = mean_diff_integral(params);
    const double rhs = second_moment_diff(params) - e1 * e1;
    b.at_most(std::abs(lhs - rhs) / std::abs(lhs), 1e-8,
              "independence/exact-identity/m=3,p=0.2",
              "closed-form variance split vs difference moments");
  });
}

}  // namespace

Suite suite_from_name(std::string_view name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::oracle: return "oracle";
    case Suite::moments: return "moments";
    case Suite::subcritical: return "subcritical";
    case Suite::supercritical: return "supercritical";
    case Suite::critical: return "critical";
    case Suite::tail: return "tail";
    case Suite::independence: return "independence";
  }
  return "unknown";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {
      Suite::oracle,      Suite::moments,  Suite::subcritical, Suite::supercritical,
      Suite::critical,    Suite::tail,     Suite::independence};
  return suites;
}

Report run_suite(Suite suite, const SuiteConfig& config) {
  SuiteBuilder b(suite, config);
  const auto start = std::chrono::steady_clock::now();
  switch (suite) {
    case Suite::oracle: suite_oracle(b); break;
    case Suite::moments: suite_moments(b); break;
    case Suite::subcritical: suite_subcritical(b); break;
    case Suite::supercritical: suite_supercritical(b); break;
    case Suite::critical: suite_critical(b); break;
    case Suite::tail: suite_tail(b); break;
    case Suite::independence: suite_independence(b); break;
  }
  b.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return b.report;
}

}  // namespace ccc
