#include "ccc/rng.hpp"

#include <cmath>

namespace ccc {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::uint32_t ctr[4], const std::uint32_t key[2]) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t n0 = hi1 ^ ctr[1] ^ key[0];
  const std::uint32_t n2 = hi0 ^ ctr[3] ^ key[1];
  ctr[0] = n0;
  ctr[1] = lo1;
  ctr[2] = n2;
  ctr[3] = lo0;
}

}  // namespace

void RngStream::refill() {
  std::uint32_t ctr[4] = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
  std::uint32_t key[2] = {static_cast<std::uint32_t>(seed_),
                          static_cast<std::uint32_t>(seed_ >> 32)};
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    round_once(ctr, key);
  }
  buf_[0] = (static_cast<std::uint64_t>(ctr[1]) << 32) | ctr[0];
  buf_[1] = (static_cast<std::uint64_t>(ctr[3]) << 32) | ctr[2];
  buf_pos_ = 0;
  ++block_;
}

std::uint64_t RngStream::next_u64() {
  if (buf_pos_ >= 2) refill();
  return buf_[buf_pos_++];
}

double RngStream::next_open01() {
  // 53 significant bits centered on half-integers: never exactly 0 or 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("RngStream: bound must be positive");
  // Lemire's multiply-shift with rejection of the biased low range.
  std::uint64_t x = next_u64();
  unsigned __int128 mul = static_cast<unsigned __int128>(x) * bound;
  std::uint64_t low = static_cast<std::uint64_t>(mul);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = next_u64();
      mul = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(mul);
    }
  }
  return static_cast<std::uint64_t>(mul >> 64);
}

double RngStream::next_exponential(double rate) {
  if (!(rate > 0)) throw std::domain_error("RngStream: rate must be positive");
  return -std::log(next_open01()) / rate;
}

long RngStream::next_poisson(double mean) {
  if (!(mean >= 0) || !std::isfinite(mean))
    throw std::domain_error("RngStream: Poisson mean must be finite and >= 0");
  long total = 0;
  while (mean > 30.0) {
    const double chunk = 30.0;
    const double limit = std::exp(-chunk);
    double prod = 1.0;
    long k = -1;
    do {
      ++k;
      prod *= next_open01();
    } while (prod > limit);
    total += k;
    mean -= chunk;
  }
  const double limit = std::exp(-mean);
  double prod = 1.0;
  long k = -1;
  do {
    ++k;
    prod *= next_open01();
  } while (prod > limit);
  return total + k;
}

}  // namespace ccc
