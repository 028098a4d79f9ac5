#pragma once

#include <cstdint>
#include <stdexcept>

namespace ccc {

/// Counter-based stream generator (Philox 4x32, 10 rounds). Streams with
/// distinct (master_seed, stream_index) pairs are statistically
/// independent, and a given pair reproduces the identical draw sequence on
/// every platform and thread schedule.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : seed_(master_seed), stream_(stream_index) {}

  std::uint64_t master_seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint64_t next_u64();

  /// Uniform draw in the open interval (0, 1); safe under log().
  double next_open01();

  /// Unbiased uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

  double next_exponential(double rate);

  /// Exact Poisson draw by multiplicative rejection, chunked so the mean
  /// may be large.
  long next_poisson(double mean);

 private:
  void refill();

  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  std::uint64_t buf_[2] = {0, 0};
  int buf_pos_ = 2;
};

}  // namespace ccc
