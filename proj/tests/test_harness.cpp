#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "ccc/harness.hpp"

using namespace ccc;

namespace {

SuiteConfig quick_config() {
  SuiteConfig cfg;
  cfg.seed = 424242;
  cfg.n_scale = 0.03;  // keep Monte Carlo parts cheap; pass/fail not asserted
  return cfg;
}

bool reports_equal_modulo_timing(const Report& a, const Report& b) {
  if (a.suite != b.suite || a.seed != b.seed || a.checks.size() != b.checks.size())
    return false;
  for (size_t i = 0; i < a.checks.size(); ++i) {
    const CheckResult &x = a.checks[i], &y = b.checks[i];
    if (x.id != y.id || x.expected != y.expected || x.observed != y.observed ||
        x.tolerance != y.tolerance || x.pass != y.pass || x.note != y.note)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("suite names round-trip") {
  for (Suite s : all_suites()) CHECK(suite_from_name(to_string(s)) == s);
  CHECK_THROWS_AS(suite_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("deterministic suites pass at full scale") {
  // These contain no Monte Carlo noise sensitive to n_scale.
  for (Suite s : {Suite::oracle, Suite::moments, Suite::tail}) {
    const Report r = run_suite(s);
    CAPTURE(to_string(s));
    for (const auto& c : r.checks) {
      CAPTURE(c.id);
      CAPTURE(c.note);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("reports are reproducible for a fixed config") {
  const SuiteConfig cfg = quick_config();
  for (Suite s : {Suite::subcritical, Suite::independence}) {
    const Report a = run_suite(s, cfg);
    const Report b = run_suite(s, cfg);
    CHECK(reports_equal_modulo_timing(a, b));
  }
}

TEST_CASE("report serialization round-trips losslessly") {
  const Report r = run_suite(Suite::tail);
  const Report back = Report::from_json(r.to_json());
  CHECK(reports_equal_modulo_timing(r, back));
  CHECK(back.elapsed_seconds == r.elapsed_seconds);

  const std::string csv = r.to_csv();
  CHECK(csv.rfind("suite,check_id,expected,observed,tolerance,pass,note", 0) == 0);
  size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == r.checks.size() + 1);
}

TEST_CASE("every manifest feature is covered by some suite check") {
  std::ifstream in(std::string(CCC_TEST_DATA_DIR) + "/coverage_manifest.json");
  REQUIRE(in.good());
  nlohmann::json manifest;
  in >> manifest;

  const SuiteConfig cfg = quick_config();
  std::vector<std::string> ids;
  for (Suite s : all_suites()) {
    const Report r = run_suite(s, cfg);
    CHECK(!r.checks.empty());
    for (const auto& c : r.checks) ids.push_back(c.id);
  }
  for (const auto& prefix : manifest.at("required_check_prefixes")) {
    const std::string p = prefix.get<std::string>();
    bool found = false;
    for (const auto& id : ids)
      if (id.rfind(p, 0) == 0) {
        found = true;
        break;
      }
    CAPTURE(p);
    CHECK(found);
  }
}
