#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccc {

struct CheckResult {
  std::string id;
  double expected = 0;
  double observed = 0;
  double tolerance = 0;
  bool pass = false;
  std::string note;
};

/// Machine-readable result of one verification suite. Serialization is
/// lossless: numbers round-trip through shortest-decimal formatting.
struct Report {
  std::string suite;
  std::string version;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t failed_count() const;

  std::string to_json() const;
  static Report from_json(const std::string& text);

  /// Flat comma-separated table with a header row.
  std::string to_csv() const;
};

}  // namespace ccc
