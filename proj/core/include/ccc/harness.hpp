#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/report.hpp"

namespace ccc {

enum class Suite {
  oracle,
  moments,
  subcritical,
  supercritical,
  critical,
  tail,
  independence,
};

Suite suite_from_name(std::string_view name);
std::string to_string(Suite suite);
const std::vector<Suite>& all_suites();

/// Suite execution knobs. Sample counts default to the sizes pinned by the
/// verification experiments; n_scale shrinks them proportionally for quick
/// runs (minimum 200 samples). Identical config implies an identical
/// Report, timings aside.
struct SuiteConfig {
  std::uint64_t seed = 20250801;
  int threads = 0;  // 0 = library default
  double n_scale = 1.0;
};

/// Runs one named cross-validation experiment. Errors inside individual
/// checks are captured as failed checks, not exceptions.
Report run_suite(Suite suite, const SuiteConfig& config = {});

}  // namespace ccc
