// ccc: clumsy-coupon-collector toolbox. Exact laws, moments, tail bounds,
// Monte Carlo batches, limit-law experiments and verification suites for
// the urn model where each day a uniform coupon is either added (with
// probability 1-p) or its urn is knocked over (with probability p).

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ccc/asymptotics.hpp"
#include "ccc/exact.hpp"
#include "ccc/harness.hpp"
#include "ccc/ks.hpp"
#include "ccc/numeric.hpp"
#include "ccc/parallel.hpp"
#include "ccc/quadrature.hpp"
#include "ccc/simulate.hpp"
#include "ccc/version.hpp"

namespace {

using namespace ccc;

struct CommonOpts {
  std::string p_text = "0";
  int m = 1;
  std::uint64_t seed = 12345;
  int threads = 0;
  std::string out;
  std::string format = "csv";  // csv | structured
};

Scalar parse_p(const std::string& text) {
  const auto p = Scalar::parse(text);
  if (!p) throw CLI::ValidationError("--p", "cannot parse probability '" + text + "'");
  const Scalar zero = Scalar::zero(p->mode());
  const Scalar one = Scalar::one(p->mode());
  if (*p < zero || *p >= one)
    throw CLI::ValidationError("--p", "probability must lie in [0, 1)");
  return *p;
}

std::string join_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

// Every output starts with a provenance line: version, argv, seed, mode.
std::string provenance(const std::string& argv_line, std::uint64_t seed,
                       const ModelParams* params) {
  std::ostringstream s;
  s << "# ccc " << kVersion << " | argv: " << argv_line << " | seed: " << seed;
  if (params)
    s << " | mode: " << (params->exact_mode() ? "exact" : "float");
  s << '\n';
  return s.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

std::string scalar_cell(const Scalar& v) {
  return v.is_exact() ? v.str() : format_double(v.to_double());
}

int cmd_pmf(const CommonOpts& o, int n_max, const std::string& argv_line) {
  const ModelParams params{o.m, parse_p(o.p_text)};
  const Pmf pmf = pmf_markov(params, n_max);
  std::ostringstream out;
  out << provenance(argv_line, o.seed, &params);
  out << "n,probability,cumulative,tail_certificate\n";
  Scalar cum = Scalar::zero(pmf.mode());
  for (int n = params.m; n <= n_max; ++n) {
    cum += pmf.probs[static_cast<size_t>(n)];
    out << n << ',' << scalar_cell(pmf.probs[static_cast<size_t>(n)]) << ','
        << scalar_cell(cum) << ',' << format_double(tail_certificate_bound(params, n))
        << '\n';
  }
  write_output(o.out, out.str());
  return 0;
}

int cmd_moments(const CommonOpts& o, int n_max, const std::string& argv_line) {
  const ModelParams params{o.m, parse_p(o.p_text)};
  const MomentReport closed = moments_closed(params);
  const Pmf pmf = pmf_markov(params, n_max);
  const MomentReport sums = moments_from_pmf(pmf);
  std::ostringstream out;
  out << provenance(argv_line, o.seed, &params);
  out << "quantity,closed_form,pmf_sum,abs_difference\n";
  const auto row = [&](const char* name, const Scalar& a, const Scalar& b) {
    out << name << ',' << scalar_cell(a) << ',' << scalar_cell(b) << ','
        << format_double(std::abs(a.to_double() - b.to_double())) << '\n';
  };
  row("mean", closed.mean, sums.mean);
  row("variance", closed.variance, sums.variance);
  row("second_moment", closed.second_moment, sums.second_moment);
  out << "tail_mass," << scalar_cell(pmf.tail_mass) << ",,\n";
  write_output(o.out, out.str());
  return 0;
}

int cmd_mgf(const CommonOpts& o, double t_min, double t_max, int steps,
            const std::string& argv_line) {
  const ModelParams params{o.m, parse_p(o.p_text)};
  if (t_max > 0 || t_min > t_max)
    throw CLI::ValidationError("--t-max", "need t_min <= t_max <= 0");
  std::ostringstream out;
  out << provenance(argv_line, o.seed, &params);
  out << "t,mgf,classical_factor,repair_factor\n";
  for (int i = 0; i < steps; ++i) {
    const double t =
        steps == 1 ? t_min : t_min + (t_max - t_min) * i / (steps - 1);
    out << format_double(t) << ',' << format_double(mgf_eval(params, t)) << ','
        << format_double(mgf_classical(params.m, t)) << ','
        << format_double(I_extra(params, t)) << '\n';
  }
  write_output(o.out, out.str());
  return 0;
}

int cmd_tail(const CommonOpts& o, std::vector<double> rs, const std::string& argv_line) {
  const ModelParams params{o.m, parse_p(o.p_text)};
  if (rs.empty()) rs = {1.0 * o.m, 2.0 * o.m, 10.0 * o.m};
  double r_max = 0;
  for (double r : rs) r_max = std::max(r_max, r);
  const int n_max = static_cast<int>(std::max(200.0, 2 * r_max));
  const Pmf pmf = pmf_markov(params, n_max);
  std::ostringstream out;
  out << provenance(argv_line, o.seed, &params);
  out << "r,exact_tail_P(T>=r),moment_bound\n";
  for (double r : rs) {
    const int n = static_cast<int>(std::ceil(r)) - 1;
    out << format_double(r) << ',' << scalar_cell(tail_from_pmf(pmf, n)) << ','
        << format_double(tail_bound(params, r)) << '\n';
  }
  write_output(o.out, out.str());
  return 0;
}

int cmd_simulate(const CommonOpts& o, std::int64_t samples, bool retain,
                 const std::string& raw_path, const std::string& argv_line) {
  const ModelParams params{o.m, parse_p(o.p_text)};
  const BatchResult batch =
      simulate_batch(params, samples, o.seed, retain || !raw_path.empty(), o.threads);
  std::ostringstream out;
  out << provenance(argv_line, o.seed, &params);
  out << "series,n,mean,variance,std_error,min,max\n";
  const auto row = [&](const char* name, const SampleSummary& s) {
    out << name << ',' << s.n << ',' << format_double(s.mean) << ','
        << format_double(s.variance()) << ',' << format_double(s.std_error()) << ','
        << format_double(s.min) << ',' << format_double(s.max) << '\n';
  };
  row("clumsy", batch.clumsy);
  row("classical", batch.classical);
  row("difference", batch.difference);
  write_output(o.out, out.str());
  if (!raw_path.empty()) {
    std::ostringstream raw;
    raw << provenance(argv_line, o.seed, &params);
    raw << "clumsy_sorted,classical_sorted,difference_sorted\n";
    for (size_t i = 0; i < batch.clumsy.sorted_samples.size(); ++i) {
      raw << format_double(batch.clumsy.sorted_samples[i]) << ','
          << format_double(batch.classical.sorted_samples[i]) << ','
          << format_double(batch.difference.sorted_samples[i]) << '\n';
    }
    write_output(raw_path, raw.str());
  }
  return 0;
}

int cmd_tau(const CommonOpts& o, double c, std::vector<double> ss,
            std::int64_t samples, std::optional<std::int64_t> q0,
            const std::string& argv_line) {
  if (ss.empty()) ss = {0.5, 1.0, 2.0};
  std::vector<double> taus;
  taus.reserve(static_cast<size_t>(samples));
  SampleSummary summary;
  for (std::int64_t i = 0; i < samples; ++i) {
    RngStream rng(o.seed, static_cast<std::uint64_t>(i));
    BirthDeathSpec spec{c, q0};
    const double tau = simulate_tau_c(spec, rng);
    taus.push_back(tau);
    summary.add(tau);
  }
  std::ostringstream out;
  out << provenance(argv_line, o.seed, nullptr);
  out << "# tau batch: c=" << format_double(c) << " n=" << samples
      << " mean=" << format_double(summary.mean)
      << " variance=" << format_double(summary.variance()) << '\n';
  out << "s,laplace_transform,empirical_mean_exp,abs_z\n";
  for (double s : ss) {
    const double target = tau_c_laplace(c, s);
    double sum = 0, sumsq = 0;
    for (double tau : taus) {
      const double e = std::exp(-s * tau);
      sum += e;
      sumsq += e * e;
    }
    const double nn = static_cast<double>(samples);
    const double mean = sum / nn;
    const double se = std::sqrt(std::max(0.0, sumsq / nn - mean * mean) / nn);
    out << format_double(s) << ',' << format_double(target) << ','
        << format_double(mean) << ','
        << format_double(std::abs(mean - target) / (se > 0 ? se : 1e-300)) << '\n';
  }
  write_output(o.out, out.str());
  return 0;
}

int cmd_limit(const CommonOpts& o, const std::string& regime_name, double c,
              std::int64_t samples, const std::string& argv_line) {
  const ModelParams params{o.m, parse_p(o.p_text)};
  Regime regime = Regime::subcritical();
  if (regime_name == "subcritical")
    regime = Regime::subcritical();
  else if (regime_name == "supercritical")
    regime = Regime::supercritical();
  else if (regime_name == "critical")
    regime = Regime::critical(c);
  else
    throw CLI::ValidationError("--regime", "unknown regime " + regime_name);

  const BatchResult batch = simulate_batch(params, samples, o.seed, true, o.threads);
  const std::vector<double> rescaled =
      rescale(batch.clumsy.sorted_samples, params.m, params.p_double(), regime);

  KsResult ks{};
  std::vector<double> reference;
  if (regime.tag == Regime::Tag::critical) {
    const SampleSummary limit = sample_limit_law(regime, samples, o.seed, o.threads,
                                                 std::uint64_t{1} << 40);
    reference = limit.sorted_samples;
    ks = ks_two_sample(rescaled, reference, 0.05);
  } else if (regime.tag == Regime::Tag::subcritical) {
    ks = ks_one_sample(rescaled, gumbel_cdf, 0.05);
  } else {
    ks = ks_one_sample(rescaled, [](double x) { return x > 0 ? -std::expm1(-x) : 0.0; },
                       0.06);
  }

  std::ostringstream out;
  out << provenance(argv_line, o.seed, &params);
  out << "# regime: " << regime.describe() << " | ks_statistic: "
      << format_double(ks.statistic) << " | threshold: " << format_double(ks.threshold)
      << " | pass: " << (ks.pass ? "true" : "false") << '\n';
  out << "sample_quantile,limit_quantile\n";
  const size_t n = rescaled.size();
  for (size_t i = 0; i < n; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    double limit_q = 0;
    if (regime.tag == Regime::Tag::critical)
      limit_q = reference[i];
    else if (regime.tag == Regime::Tag::subcritical)
      limit_q = gumbel_quantile(u);
    else
      limit_q = -std::log1p(-u);
    out << format_double(rescaled[i]) << ',' << format_double(limit_q) << '\n';
  }
  write_output(o.out, out.str());
  return ks.pass ? 0 : 1;
}

int cmd_expand(const CommonOpts& o, const std::string& regime_name, double c,
               const std::string& argv_line) {
  const ModelParams params{o.m, parse_p(o.p_text)};
  Regime regime = Regime::subcritical();
  if (regime_name == "subcritical")
    regime = Regime::subcritical();
  else if (regime_name == "supercritical")
    regime = Regime::supercritical();
  else if (regime_name == "critical")
    regime = Regime::critical(c);
  else if (regime_name == "fixed-p" || regime_name == "fixed_p")
    regime = Regime::fixed_p();
  else
    throw CLI::ValidationError("--regime", "unknown regime " + regime_name);

  std::ostringstream out;
  out << provenance(argv_line, o.seed, &params);
  out << "# regime: " << regime.describe() << '\n';
  out << "quantity,exact,asymptotic,rel_difference\n";
  const auto row = [&](const char* name, double exact, double expanded) {
    out << name << ',' << format_double(exact) << ',' << format_double(expanded) << ','
        << format_double(std::abs(exact - expanded) / std::abs(exact)) << '\n';
  };
  row("mean", mean_closed(params).to_double(), mean_asymptotic(params, regime));
  row("variance", variance_closed(params).to_double(),
      variance_asymptotic(params, regime));
  write_output(o.out, out.str());
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& suite_name, double scale,
               const std::string& argv_line) {
  SuiteConfig config;
  config.seed = o.seed;
  config.threads = o.threads;
  config.n_scale = scale;
  std::vector<Suite> suites;
  if (suite_name == "all")
    suites = all_suites();
  else
    suites = {suite_from_name(suite_name)};

  bool ok = true;
  std::ostringstream out;
  out << provenance(argv_line, o.seed, nullptr);
  // One machine-readable document per invocation: suites are joined into
  // a single JSON array in structured mode.
  if (o.format == "structured") out << "[\n";
  bool first = true;
  for (Suite s : suites) {
    const Report report = run_suite(s, config);
    ok = ok && report.all_pass();
    if (o.format == "structured") {
      if (!first) out << ",\n";
      out << report.to_json();
    } else {
      out << report.to_csv();
    }
    first = false;
    std::cerr << "suite " << report.suite << ": "
              << (report.checks.size() - report.failed_count()) << '/'
              << report.checks.size() << " checks pass ("
              << format_double(report.elapsed_seconds) << "s)\n";
  }
  if (o.format == "structured") out << "\n]\n";
  write_output(o.out, out.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string argv_line = join_argv(argc, argv);
  CLI::App app{"clumsy coupon collector: exact laws, asymptotics, simulation"};
  app.set_version_flag("--version", std::string("ccc ") + kVersion);
  app.require_subcommand(1);

  CommonOpts o;
  int n_max = 200;
  double t_min = -2, t_max = 0;
  int t_steps = 21;
  std::vector<double> rs, ss;
  std::int64_t samples = 10000;
  bool retain = false;
  std::string raw_path, regime_name = "subcritical", suite_name = "all";
  double c = 1.0, scale = 1.0;
  std::optional<std::int64_t> q0;

  const auto add_common = [&](CLI::App* cmd, bool wants_model) {
    if (wants_model) {
      cmd->add_option("--m", o.m, "number of coupon types")
          ->required()
          ->check(CLI::PositiveNumber);
      cmd->add_option("--p", o.p_text,
                      "clumsiness probability; a rational like 1/2 selects exact "
                      "arithmetic, a decimal selects floating");
    }
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--threads", o.threads, "worker cap (0 = CCC_THREADS or all cores)");
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--format", o.format, "csv | structured")
        ->check(CLI::IsMember({"csv", "structured"}));
  };

  auto* pmf = app.add_subcommand("pmf", "truncated law of the collection time");
  add_common(pmf, true);
  pmf->add_option("--n-max", n_max, "truncation point");

  auto* moments = app.add_subcommand("moments", "closed-form moments with pmf cross-check");
  add_common(moments, true);
  moments->add_option("--n-max", n_max, "pmf truncation for the cross-check");

  auto* mgf = app.add_subcommand("mgf", "moment generating function over a t-grid");
  add_common(mgf, true);
  mgf->add_option("--t-min", t_min);
  mgf->add_option("--t-max", t_max);
  mgf->add_option("--t-steps", t_steps)->check(CLI::PositiveNumber);

  auto* tail = app.add_subcommand("tail", "exact tail vs the moment bound");
  add_common(tail, true);
  tail->add_option("--r", rs, "thresholds (default m, 2m, 10m)");

  auto* simulate = app.add_subcommand("simulate", "coupled Monte Carlo batches");
  add_common(simulate, true);
  simulate->add_option("--samples", samples)->check(CLI::PositiveNumber);
  simulate->add_flag("--retain", retain, "keep per-sample values in memory");
  simulate->add_option("--raw-out", raw_path, "write sorted raw samples to a file");

  auto* tau = app.add_subcommand("tau", "birth-death hitting time: simulation vs transform");
  add_common(tau, false);
  tau->add_option("--c", c, "arrival rate / initial Poisson mean")->required();
  tau->add_option("--s", ss, "transform arguments (default 0.5 1 2)");
  tau->add_option("--samples", samples)->check(CLI::PositiveNumber);
  tau->add_option("--q0", q0, "override the Poisson initial state");

  auto* limit = app.add_subcommand("limit", "rescaled samples against the limit law");
  add_common(limit, true);
  limit->add_option("--regime", regime_name, "subcritical | supercritical | critical")
      ->required();
  limit->add_option("--c", c, "critical-regime constant");
  limit->add_option("--samples", samples)->check(CLI::PositiveNumber);

  auto* expand = app.add_subcommand("expand", "asymptotic expansions next to exact values");
  add_common(expand, true);
  expand->add_option("--regime", regime_name,
                     "subcritical | supercritical | critical | fixed-p")
      ->required();
  expand->add_option("--c", c, "critical-regime constant");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, false);
  verify->add_option("--suite", suite_name,
                     "oracle | moments | subcritical | supercritical | critical | "
                     "tail | independence | all");
  verify->add_option("--scale", scale, "sample-count scale factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*pmf) return cmd_pmf(o, n_max, argv_line);
    if (*moments) return cmd_moments(o, n_max, argv_line);
    if (*mgf) return cmd_mgf(o, t_min, t_max, t_steps, argv_line);
    if (*tail) return cmd_tail(o, rs, argv_line);
    if (*simulate) return cmd_simulate(o, samples, retain, raw_path, argv_line);
    if (*tau) return cmd_tau(o, c, ss, samples, q0, argv_line);
    if (*limit) return cmd_limit(o, regime_name, c, samples, argv_line);
    if (*expand) return cmd_expand(o, regime_name, c, argv_line);
    if (*verify) return cmd_verify(o, suite_name, scale, argv_line);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
