#ifdef CCC_CLI_PATH

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run(const std::string& args) {
  const std::string cmd = std::string(CCC_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli help and version") {
  CHECK(run("--help").exit_code == 0);
  const CmdResult v = run("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("ccc") != std::string::npos);
}

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run("bogus-subcommand").exit_code == 2);
  CHECK(run("pmf").exit_code == 2);  // missing --m
}

TEST_CASE("cli moments echoes exact arithmetic") {
  const CmdResult r = run("moments --m 2 --p 1/2 --n-max 400");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mode: exact") != std::string::npos);
  CHECK(r.out.find("mean,8,") != std::string::npos);
  CHECK(r.out.find("variance,40,") != std::string::npos);
}

TEST_CASE("cli pmf rows for the geometric case") {
  const CmdResult r = run("pmf --m 1 --p 0.5 --n-max 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mode: float") != std::string::npos);
  CHECK(r.out.find("1,0.5,0.5,") != std::string::npos);
  CHECK(r.out.find("2,0.25,0.75,") != std::string::npos);
  CHECK(r.out.find("3,0.125,0.875,") != std::string::npos);
}

TEST_CASE("cli simulate is deterministic given the seed") {
  const std::string args = "simulate --m 2 --p 0.5 --samples 2000 --seed 99";
  const CmdResult a = run(args + " --threads 1");
  const CmdResult b = run(args + " --threads 4");
  CHECK(a.exit_code == 0);
  // Identical apart from the provenance line, which echoes argv.
  CHECK(a.out.substr(a.out.find('\n')) == b.out.substr(b.out.find('\n')));
}

TEST_CASE("cli verify runs a fast suite") {
  const CmdResult r = run("verify --suite tail");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tail-bound/dominates") != std::string::npos);
}

TEST_CASE("cli expand reports exact vs asymptotic") {
  const CmdResult r = run("expand --m 25 --p 0.5 --regime fixed-p");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mean,") != std::string::npos);
}

#endif  // CCC_CLI_PATH
