#include "ccc/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "ccc/asymptotics.hpp"
#include "ccc/parallel.hpp"

namespace ccc {

namespace {

constexpr std::int64_t kChunk = 4096;

}  // namespace

double SampleSummary::std_error() const {
  return n > 1 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
}

void SampleSummary::add(double x) {
  ++n;
  const double delta = x - mean;
  mean += delta / static_cast<double>(n);
  m2 += delta * (x - mean);
  min = std::min(min, x);
  max = std::max(max, x);
}

SampleSummary SampleSummary::merge(const SampleSummary& a, const SampleSummary& b) {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  SampleSummary out;
  out.n = a.n + b.n;
  const double delta = b.mean - a.mean;
  out.mean = a.mean + delta * static_cast<double>(b.n) / static_cast<double>(out.n);
  out.m2 = a.m2 + b.m2 +
           delta * delta * static_cast<double>(a.n) * static_cast<double>(b.n) /
               static_cast<double>(out.n);
  out.min = std::min(a.min, b.min);
  out.max = std::max(a.max, b.max);
  out.master_seed = a.master_seed;
  out.first_stream = a.first_stream;
  return out;
}

CoupledSample simulate_coupled(const ModelParams& params, RngStream& rng) {
  params.validate();
  const int m = params.m;
  const double threshold = 1.0 - params.p_double();  // update is kept iff U <= 1-p

  // Per-type standing status: 0 never updated, 1 standing, 2 knocked over.
  std::vector<std::uint8_t> status(static_cast<size_t>(m), 0);
  int seen = 0, standing = 0;
  CoupledSample out;
  for (std::int64_t n = 1;; ++n) {
    if (n > kStepCap) throw SimulationError("simulate_coupled: step cap exceeded");
    const auto type = static_cast<size_t>(rng.next_below(static_cast<std::uint64_t>(m)));
    const double u = rng.next_open01();
    const std::uint8_t old = status[type];
    if (old == 0) ++seen;
    if (u <= threshold) {
      if (old != 1) ++standing;
      status[type] = 1;
    } else {
      if (old == 1) --standing;
      status[type] = 2;
    }
    if (out.t_classical == 0 && seen == m) out.t_classical = n;
    if (standing == m) {
      out.t_clumsy = n;
      return out;
    }
  }
}

BatchResult simulate_batch(const ModelParams& params, std::int64_t n_samples,
                           std::uint64_t master_seed, bool retain, int threads,
                           std::uint64_t stream_offset) {
  params.validate();
  if (n_samples < 1) throw std::invalid_argument("simulate_batch: n_samples must be >= 1");
  if (retain && n_samples > kMaxRetainedSamples)
    throw std::invalid_argument("simulate_batch: retained sample memory cap exceeded");

  const std::int64_t chunks = chunk_count(n_samples, kChunk);
  std::vector<SampleSummary> sum_p(chunks), sum_0(chunks), sum_d(chunks);
  std::vector<double> keep_p, keep_0, keep_d;
  if (retain) {
    keep_p.resize(static_cast<size_t>(n_samples));
    keep_0.resize(static_cast<size_t>(n_samples));
    keep_d.resize(static_cast<size_t>(n_samples));
  }

  parallel_chunks(n_samples, kChunk, threads, [&](std::int64_t c, std::int64_t begin,
                                                  std::int64_t end) {
    SampleSummary sp, s0, sd;
    for (std::int64_t i = begin; i < end; ++i) {
      RngStream rng(master_seed, stream_offset + static_cast<std::uint64_t>(i));
      const CoupledSample s = simulate_coupled(params, rng);
      const auto tp = static_cast<double>(s.t_clumsy);
      const auto t0 = static_cast<double>(s.t_classical);
      sp.add(tp);
      s0.add(t0);
      sd.add(tp - t0);
      if (retain) {
        keep_p[static_cast<size_t>(i)] = tp;
        keep_0[static_cast<size_t>(i)] = t0;
        keep_d[static_cast<size_t>(i)] = tp - t0;
      }
    }
    sum_p[c] = sp;
    sum_0[c] = s0;
    sum_d[c] = sd;
  });

  BatchResult out;
  for (std::int64_t c = 0; c < chunks; ++c) {
    out.clumsy = SampleSummary::merge(out.clumsy, sum_p[c]);
    out.classical = SampleSummary::merge(out.classical, sum_0[c]);
    out.difference = SampleSummary::merge(out.difference, sum_d[c]);
  }
  for (SampleSummary* s : {&out.clumsy, &out.classical, &out.difference}) {
    s->master_seed = master_seed;
    s->first_stream = stream_offset;
  }
  if (retain) {
    std::sort(keep_p.begin(), keep_p.end());
    std::sort(keep_0.begin(), keep_0.end());
    std::sort(keep_d.begin(), keep_d.end());
    out.clumsy.sorted_samples = std::move(keep_p);
    out.classical.sorted_samples = std::move(keep_0);
    out.difference.sorted_samples = std::move(keep_d);
  }
  return out;
}

double simulate_tau_c(const BirthDeathSpec& spec, RngStream& rng) {
  spec.validate();
  std::int64_t q = spec.q0_override ? *spec.q0_override : rng.next_poisson(spec.c);
  double t = 0.0;
  std::int64_t steps = 0;
  while (q > 0) {
    if (++steps > kStepCap) throw SimulationError("simulate_tau_c: step cap exceeded");
    const double rate = spec.c + static_cast<double>(q);
    t += rng.next_exponential(rate);
    if (rng.next_open01() < spec.c / rate)
      ++q;
    else
      --q;
  }
  return t;
}

SampleSummary sample_limit_law(const Regime& regime, std::int64_t n,
                               std::uint64_t master_seed, int threads,
                               std::uint64_t stream_offset) {
  if (n < 1) throw std::invalid_argument("sample_limit_law: n must be >= 1");
  if (n > kMaxRetainedSamples)
    throw std::invalid_argument("sample_limit_law: retained sample memory cap exceeded");
  if (regime.tag == Regime::Tag::fixed_p)
    throw std::invalid_argument("sample_limit_law: no limit law for the fixed-p label");
  if (regime.tag == Regime::Tag::critical && !(regime.c > 0))
    throw std::invalid_argument("sample_limit_law: critical regime requires c > 0");

  const std::int64_t chunks = chunk_count(n, kChunk);
  std::vector<SampleSummary> partial(chunks);
  std::vector<double> values(static_cast<size_t>(n));
  parallel_chunks(n, kChunk, threads, [&](std::int64_t c, std::int64_t begin,
                                          std::int64_t end) {
    SampleSummary s;
    for (std::int64_t i = begin; i < end; ++i) {
      RngStream rng(master_seed, stream_offset + static_cast<std::uint64_t>(i));
      double x = 0;
      switch (regime.tag) {
        case Regime::Tag::subcritical:
          x = -std::log(-std::log(rng.next_open01()));
          break;
        case Regime::Tag::supercritical:
          x = -std::log(rng.next_open01());
          break;
        case Regime::Tag::critical: {
          const double g = -std::log(-std::log(rng.next_open01()));
          BirthDeathSpec bd{regime.c, std::nullopt};
          x = g + simulate_tau_c(bd, rng);
          break;
        }
        case Regime::Tag::fixed_p:
          break;  // rejected above
      }
      s.add(x);
      values[static_cast<size_t>(i)] = x;
    }
    partial[c] = s;
  });
  SampleSummary out;
  for (std::int64_t c = 0; c < chunks; ++c) out = SampleSummary::merge(out, partial[c]);
  out.master_seed = master_seed;
  out.first_stream = stream_offset;
  std::sort(values.begin(), values.end());
  out.sorted_samples = std::move(values);
  return out;
}

}  // namespace ccc
