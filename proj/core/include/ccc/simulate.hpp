#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ccc/model.hpp"
#include "ccc/rng.hpp"

namespace ccc {

struct Regime;  // asymptotics.hpp

/// Raised when a trajectory exceeds the per-sample step cap, converting
/// astronomically unlikely non-termination or parameter abuse into a
/// diagnostic.
class SimulationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kStepCap = 1'000'000'000;
inline constexpr std::int64_t kMaxRetainedSamples = 50'000'000;

/// One trajectory of the shared-randomness construction: t_classical is
/// the first day every type has been drawn, t_clumsy the first day every
/// type's most recent update was additionally non-clumsy.
struct CoupledSample {
  std::int64_t t_classical = 0;
  std::int64_t t_clumsy = 0;
};

/// Streaming batch statistics plus an optional retained sample store.
struct SampleSummary {
  std::int64_t n = 0;
  double mean = 0;
  double m2 = 0;  // sum of squared deviations
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  std::vector<double> sorted_samples;
  std::uint64_t master_seed = 0;
  std::uint64_t first_stream = 0;

  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
  double std_error() const;
  void add(double x);
  static SampleSummary merge(const SampleSummary& a, const SampleSummary& b);
};

struct BatchResult {
  SampleSummary clumsy;
  SampleSummary classical;
  SampleSummary difference;
};

CoupledSample simulate_coupled(const ModelParams& params, RngStream& rng);

/// n_samples coupled trajectories, sample i on stream stream_offset + i.
/// Results are bit-identical for a given master_seed regardless of the
/// worker count; retain=true keeps sorted per-quantity sample arrays.
BatchResult simulate_batch(const ModelParams& params, std::int64_t n_samples,
                           std::uint64_t master_seed, bool retain, int threads = 0,
                           std::uint64_t stream_offset = 0);

/// Birth-death hitting-time model: unit-rate deaths per occupant, arrivals
/// at rate c, started from Poisson(c) unless overridden.
struct BirthDeathSpec {
  double c = 1.0;
  std::optional<std::int64_t> q0_override;

  void validate() const {
    if (!(c > 0)) throw std::domain_error("BirthDeathSpec: c must be positive");
    if (q0_override && *q0_override < 0)
      throw std::domain_error("BirthDeathSpec: q0 must be >= 0");
  }
};

/// First hitting time of state 0, simulated with exact exponential clocks
/// (no time discretisation).
double simulate_tau_c(const BirthDeathSpec& spec, RngStream& rng);

/// i.i.d. draws from a limit law: Gumbel via inverse CDF, rate-1
/// exponential, or the critical-case sum of an independent Gumbel and a
/// birth-death hitting time. Samples are retained sorted.
SampleSummary sample_limit_law(const Regime& regime, std::int64_t n,
                               std::uint64_t master_seed, int threads = 0,
                               std::uint64_t stream_offset = 0);

}  // namespace ccc
