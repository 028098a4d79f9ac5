#include "ccc/report.hpp"

#include <json.hpp>
#include <sstream>

#include "ccc/scalar.hpp"

namespace ccc {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::size_t Report::failed_count() const {
  std::size_t k = 0;
  for (const auto& c : checks)
    if (!c.pass) ++k;
  return k;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["version"] = version;
  j["seed"] = seed;
  j["elapsed_seconds"] = elapsed_seconds;
  j["pass"] = all_pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass},
                           {"note", c.note}});
  }
  return j.dump(2);
}

Report Report::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("id").get<std::string>(), c.at("expected").get<double>(),
                        c.at("observed").get<double>(), c.at("tolerance").get<double>(),
                        c.at("pass").get<bool>(), c.at("note").get<std::string>()});
  }
  return r;
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "suite,check_id,expected,observed,tolerance,pass,note\n";
  for (const auto& c : checks) {
    out << csv_escape(suite) << ',' << csv_escape(c.id) << ','
        << format_double(c.expected) << ',' << format_double(c.observed) << ','
        << format_double(c.tolerance) << ',' << (c.pass ? "true" : "false") << ','
        << csv_escape(c.note) << '\n';
  }
  return out.str();
}

}  // namespace ccc
