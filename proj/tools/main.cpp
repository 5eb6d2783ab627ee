#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "weylkit/parse.hpp"
#include "weylkit/render.hpp"
#include "weylkit/special_numbers.hpp"
#include "weylkit/identities.hpp"
#include "weylkit/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailure = 2;

int run_normal_order(const std::string& expr, const std::string& c_value,
                     const std::string& format) {
  weylkit::NormalForm nf = weylkit::parse_to_nf(expr);
  if (c_value == "1")
    nf = nf.substitute_c(weylkit::PolyCoeff(1));
  else if (c_value == "i")
    nf = nf.substitute_c(weylkit::PolyCoeff::imaginary_unit());
  else if (c_value != "symbolic")
    throw std::invalid_argument("unknown --c-value '" + c_value + "'");
  std::cout << weylkit::render(nf, weylkit::render_format_from_name(format)) << "\n";
  return kExitOk;
}

void write_report(const std::string& path, const std::vector<weylkit::SuiteResult>& results) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
  out << weylkit::report_json(results) << "\n";
}

void print_suite_line(const weylkit::SuiteResult& r) {
  const char* status = r.clean() ? "pass" : (r.asserted ? "FAIL" : "diag");
  std::printf("  [%s] %-24s %6ld cases, %4zu mismatch, %.2fs\n", status, r.name.c_str(), r.cases,
              r.failures.size(), r.seconds);
  for (const auto& note : r.notes) std::printf("         note: %s\n", note.c_str());
}

int run_identity(const std::string& name, const weylkit::SuiteOptions& opts,
                 const std::string& report_path) {
  if (!weylkit::is_known_suite(name)) {
    std::cerr << "error: unknown identity '" << name << "'\n";
    std::cerr << "known identities:";
    for (const auto& n : weylkit::suite_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return kExitUsage;
  }
  weylkit::SuiteResult result = weylkit::run_suite(name, opts);
  print_suite_line(result);
  for (std::size_t k = 0; k < result.failures.size() && k < 10; ++k) {
    const auto& f = result.failures[k];
    std::printf("         mismatch at (");
    for (std::size_t j = 0; j < f.params.size(); ++j)
      std::printf("%s%ld", j ? "," : "", f.params[j]);
    std::printf(")%s%s\n", f.detail.empty() ? "" : ": ", f.detail.c_str());
  }
  if (!report_path.empty()) write_report(report_path, {result});
  return result.gate_failed() ? kExitVerificationFailure : kExitOk;
}

int run_verify_all(const weylkit::SuiteOptions& opts, const std::string& report_path) {
  auto begin = std::chrono::steady_clock::now();
  std::vector<weylkit::SuiteResult> results = weylkit::run_all_suites(opts);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  long cases = 0;
  int gate_failures = 0;
  for (const auto& r : results) {
    print_suite_line(r);
    cases += r.cases;
    gate_failures += r.gate_failed();
  }
  std::printf("%ld cases in %.2fs; %d asserted suite(s) failed\n", cases, total, gate_failures);
  if (!report_path.empty()) write_report(report_path, results);
  return gate_failures ? kExitVerificationFailure : kExitOk;
}

int run_tables(const std::string& kind, int count, const std::string& format) {
  std::vector<std::string> values;
  if (kind == "bernoulli") {
    if (count < 0) throw std::invalid_argument("N must be >= 0");
    for (int n = 0; n <= count; ++n) values.push_back(weylkit::bernoulli(n).str());
  } else if (kind == "euler-zero") {
    if (count < 1) throw std::invalid_argument("N must be >= 1");
    for (int k = 1; k <= count; ++k) values.push_back(weylkit::euler_zero(k).str());
  } else if (kind == "v") {
    if (count < 1) throw std::invalid_argument("N must be >= 1");
    weylkit::VSystem sys = weylkit::v_system_solve(count);
    for (const auto& v : sys.solution) values.push_back(v.str());
  } else {
    throw std::invalid_argument("unknown table kind '" + kind + "'");
  }
  if (format == "json") {
    std::string out = "{\"kind\":\"" + kind + "\",\"values\":[";
    for (std::size_t k = 0; k < values.size(); ++k)
      out += (k ? ",\"" : "\"") + values[k] + "\"";
    std::cout << out << "]}\n";
  } else {
    for (const auto& v : values) std::cout << v << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for the Weyl algebra [X, Y] = c"};
  app.require_subcommand(1);

  // normal-order
  std::string expr, c_value = "symbolic", format = "text";
  auto* cmd_no = app.add_subcommand("normal-order", "rewrite an expression into Y^a X^b order");
  cmd_no->add_option("expr", expr, "operator expression, e.g. \"[X^2,Y^2]\"")->required();
  cmd_no->add_option("--c-value", c_value, "specialize c (symbolic, 1, i)")
      ->check(CLI::IsMember({"symbolic", "1", "i"}));
  cmd_no->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  // identity
  std::string identity_name, report_path;
  weylkit::SuiteOptions opts;
  auto* cmd_id = app.add_subcommand("identity", "run one verification suite");
  cmd_id->add_option("name", identity_name, "suite name (see --list)")->required();
  cmd_id->add_option("--max", opts.max_degree, "parameter sweep bound")->check(CLI::PositiveNumber);
  cmd_id->add_option("--free-cutoff", opts.free_cutoff, "free-algebra cutoff")
      ->check(CLI::PositiveNumber);
  cmd_id->add_option("--jobs", opts.jobs, "parallel workers")->check(CLI::PositiveNumber);
  cmd_id->add_option("--report", report_path, "write a JSON report here");

  // tables
  std::string table_kind, table_format = "text";
  int table_count = 0;
  auto* cmd_tb = app.add_subcommand("tables", "print exact number tables");
  cmd_tb->add_option("kind", table_kind, "bernoulli, euler-zero or v")->required();
  cmd_tb->add_option("N", table_count, "last index")->required();
  cmd_tb->add_option("--format", table_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // verify-all
  weylkit::SuiteOptions all_opts;
  std::string all_report_path;
  auto* cmd_va = app.add_subcommand("verify-all", "run every verification suite");
  cmd_va->add_option("--max-degree", all_opts.max_degree, "parameter sweep bound")
      ->check(CLI::PositiveNumber);
  cmd_va->add_option("--free-cutoff", all_opts.free_cutoff, "free-algebra cutoff")
      ->check(CLI::PositiveNumber);
  cmd_va->add_option("--jobs", all_opts.jobs, "parallel workers")->check(CLI::PositiveNumber);
  cmd_va->add_option("--report", all_report_path, "write a JSON report here");

  // bch
  int bch_cutoff = 6;
  auto* cmd_bch = app.add_subcommand("bch", "print the Z1 forms and their comparison");
  cmd_bch->add_option("--cutoff", bch_cutoff, "series cutoff")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_no->parsed()) return run_normal_order(expr, c_value, format);
    if (cmd_id->parsed()) return run_identity(identity_name, opts, report_path);
    if (cmd_tb->parsed()) return run_tables(table_kind, table_count, table_format);
    if (cmd_va->parsed()) return run_verify_all(all_opts, all_report_path);
    if (cmd_bch->parsed()) {
      std::cout << weylkit::bch_report_text(bch_cutoff);
      return kExitOk;
    }
  } catch (const weylkit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
