#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// exercises the installed binary end to end; the path arrives via the
// WEYLKIT_CLI environment variable set by ctest

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("WEYLKIT_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "WEYLKIT_CLI must point at the binary");
  std::string command = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 512> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("normal-order subcommand") {
  RunResult r = run_cli("normal-order \"[X^2,Y^2]\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4*c*Y*X + 2*c^2\n");

  r = run_cli("normal-order \"{X,Y}\" --c-value 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2*Y*X + 1\n");

  r = run_cli("normal-order \"X*Y - Y*X\" --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "{\"basis\":\"YX\",\"symbols\":[\"c\",\"s\",\"t\"],"
        "\"terms\":[{\"y\":0,\"x\":0,\"coeff\":[{\"c\":1,\"s\":0,\"t\":0,"
        "\"re\":\"1/1\",\"im\":\"0/1\"}]}]}\n");
}

TEST_CASE("parse errors exit with code 1 and a position") {
  RunResult r = run_cli("normal-order \"X^-1\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("position 2") != std::string::npos);
}

TEST_CASE("tables subcommand") {
  RunResult r = run_cli("tables v 9");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/2\n0\n-1/4\n0\n1/2\n0\n-17/8\n0\n31/2\n");

  r = run_cli("tables bernoulli 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1\n-1/2\n1/6\n0\n-1/30\n");

  r = run_cli("tables euler-zero 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-1/2\n0\n1/4\n");

  r = run_cli("tables euler-zero 3 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{\"kind\":\"euler-zero\",\"values\":[\"-1/2\",\"0\",\"1/4\"]}\n");

  r = run_cli("tables nonsense 3");
  CHECK(r.exit_code == 1);
}

TEST_CASE("identity subcommand exit codes") {
  RunResult r = run_cli("identity main-euler --max 3");
  CHECK(r.exit_code == 0);

  r = run_cli("identity no-such-suite");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("unknown identity") != std::string::npos);

  // diagnostics report mismatches but do not flip the exit status
  r = run_cli("identity bd-shift --max 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("mismatch") != std::string::npos);

  r = run_cli("identity bch-z1-anti-diagnostic --free-cutoff 3");
  CHECK(r.exit_code == 0);
}

TEST_CASE("verify-all smoke run with report") {
  std::string report_path = "cli_report_smoke.json";
  RunResult r = run_cli("verify-all --max-degree 2 --free-cutoff 3 --jobs 2 --report " +
                        report_path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 asserted suite(s) failed") != std::string::npos);
  FILE* f = fopen(report_path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string contents;
  std::array<char, 512> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), f))
    contents.append(buffer.data(), got);
  fclose(f);
  std::remove(report_path.c_str());
  CHECK(contents.find("\"suites\"") != std::string::npos);
  CHECK(contents.find("\"bd-shift\"") != std::string::npos);
}

TEST_CASE("bch subcommand") {
  RunResult r = run_cli("bch --cutoff 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("match: yes") != std::string::npos);
  CHECK(r.output.find("diagnostic") != std::string::npos);
}
