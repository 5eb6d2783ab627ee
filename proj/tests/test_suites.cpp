#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "weylkit/suites.hpp"

using namespace weylkit;

TEST_CASE("registry lists the stable identity names") {
  const auto& names = suite_names();
  for (const char* required :
       {"main-euler", "main-bernoulli", "xy-vs-yx", "v-system", "bd-product", "bd-commutator",
        "bd-anticommutator", "bd-shift", "jacobi", "anti-jacobi-witness", "lie-series", "mendas",
        "bch-z1", "bch-z1-anti-diagnostic", "s-order-ground", "s-order-intertwine",
        "weyl-vs-symmetrization", "born-jordan", "moment-bracket"}) {
    CAPTURE(required);
    CHECK(std::count(names.begin(), names.end(), required) == 1);
  }
  CHECK(names.size() == 19);
  CHECK_FALSE(is_known_suite("no-such-identity"));
  CHECK_THROWS_AS(run_suite("no-such-identity", SuiteOptions{}), std::invalid_argument);
}

TEST_CASE("diagnostic classification is fixed") {
  for (const char* diagnostic :
       {"bd-commutator", "bd-anticommutator", "bd-shift", "bch-z1-anti-diagnostic"})
    CHECK_FALSE(suite_is_asserted(diagnostic));
  for (const char* asserted : {"main-euler", "v-system", "jacobi", "moment-bracket"})
    CHECK(suite_is_asserted(asserted));
}

TEST_CASE("smoke run: every asserted suite is clean at low bounds") {
  SuiteOptions opts;
  opts.max_degree = 2;
  opts.free_cutoff = 3;
  for (const auto& result : run_all_suites(opts)) {
    CAPTURE(result.name);
    if (result.asserted) CHECK(result.clean());
    CHECK(result.cases > 0);
    CHECK_FALSE(result.gate_failed());
  }
}

TEST_CASE("known diagnostics report their mismatches") {
  SuiteOptions opts;
  opts.max_degree = 2;
  opts.free_cutoff = 3;

  SuiteResult shift = run_suite("bd-shift", opts);
  CHECK_FALSE(shift.asserted);
  CHECK_FALSE(shift.clean());
  // exactly the min(m,k) >= 1 printed cases fail, on both sides
  long expected = 2L * opts.max_degree * opts.max_degree;
  CHECK(static_cast<long>(shift.failures.size()) == expected);
  for (const auto& f : shift.failures) {
    REQUIRE(f.params.size() >= 3);
    CHECK(f.params[0] >= 1);
    CHECK(f.params[1] >= 1);
  }

  SuiteResult anti = run_suite("bch-z1-anti-diagnostic", opts);
  CHECK_FALSE(anti.asserted);
  CHECK_FALSE(anti.clean());

  // the printed parity sums, in contrast, agree with the engine
  CHECK(run_suite("bd-commutator", opts).clean());
  CHECK(run_suite("bd-anticommutator", opts).clean());
}

TEST_CASE("report json is deterministic and job-count independent") {
  SuiteOptions one;
  one.max_degree = 2;
  one.free_cutoff = 3;
  SuiteOptions four = one;
  four.jobs = 4;

  std::vector<SuiteResult> a = run_all_suites(one);
  std::vector<SuiteResult> b = run_all_suites(four);
  std::string ja = report_json(a);
  CHECK(ja == report_json(b));
  CHECK(ja == report_json(run_all_suites(one)));
  CHECK(ja.find("\"suites\"") != std::string::npos);

  // sorted by name
  std::size_t anti_pos = ja.find("\"bd-anticommutator\"");
  std::size_t euler_pos = ja.find("\"main-euler\"");
  std::size_t xy_pos = ja.find("\"xy-vs-yx\"");
  CHECK(anti_pos < euler_pos);
  CHECK(euler_pos < xy_pos);
}

TEST_CASE("bch report text shows the diagnostic split") {
  std::string report = bch_report_text(4);
  CHECK(report.find("brute-force series") != std::string::npos);
  CHECK(report.find("match: yes") != std::string::npos);
  CHECK(report.find("no (diagnostic)") != std::string::npos);
  CHECK_THROWS_AS(bch_report_text(0), std::invalid_argument);
  CHECK_THROWS_AS(bch_report_text(12), std::invalid_argument);
}
