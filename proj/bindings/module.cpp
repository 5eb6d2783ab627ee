#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylkit/identities.hpp"
#include "weylkit/parse.hpp"
#include "weylkit/render.hpp"
#include "weylkit/special_numbers.hpp"
#include "weylkit/suites.hpp"

namespace py = pybind11;

namespace {

std::string normal_order(const std::string& expr, const std::string& c_value,
                         const std::string& format) {
  weylkit::NormalForm nf = weylkit::parse_to_nf(expr);
  if (c_value == "1")
    nf = nf.substitute_c(weylkit::PolyCoeff(1));
  else if (c_value == "i")
    nf = nf.substitute_c(weylkit::PolyCoeff::imaginary_unit());
  else if (c_value != "symbolic")
    throw std::invalid_argument("c_value must be 'symbolic', '1' or 'i'");
  return weylkit::render(nf, weylkit::render_format_from_name(format));
}

std::vector<std::string> bernoulli_table(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<std::string> out;
  for (int k = 0; k <= n; ++k) out.push_back(weylkit::bernoulli(k).str());
  return out;
}

std::vector<std::string> euler_zero_table(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back(weylkit::euler_zero(k).str());
  return out;
}

std::vector<std::string> v_table(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  weylkit::VSystem sys = weylkit::v_system_solve(n);
  std::vector<std::string> out;
  for (const auto& v : sys.solution) out.push_back(v.str());
  return out;
}

std::string run_identity(const std::string& name, int max_degree, int free_cutoff, int jobs) {
  weylkit::SuiteOptions opts{max_degree, free_cutoff, jobs};
  return weylkit::report_json({weylkit::run_suite(name, opts)});
}

std::string verify_all(int max_degree, int free_cutoff, int jobs) {
  weylkit::SuiteOptions opts{max_degree, free_cutoff, jobs};
  return weylkit::report_json(weylkit::run_all_suites(opts));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact symbolic engine for the Weyl algebra [X, Y] = c";
  m.attr("__version__") = "0.1.0";

  m.def("normal_order", &normal_order, py::arg("expr"), py::arg("c_value") = "symbolic",
        py::arg("format") = "text",
        "Parse an operator expression and return its Y^a X^b normal form.");
  m.def("identity_names", [] { return weylkit::suite_names(); },
        "Names of the verification suites.");
  m.def("bch_report", &weylkit::bch_report_text, py::arg("cutoff") = 6,
        "Text comparison of the Z1 forms at the given cutoff.");

  m.def("_bernoulli_table", &bernoulli_table, py::arg("n"));
  m.def("_euler_zero_table", &euler_zero_table, py::arg("n"));
  m.def("_v_table", &v_table, py::arg("n"));
  m.def("_run_identity", &run_identity, py::arg("name"), py::arg("max_degree") = 6,
        py::arg("free_cutoff") = 6, py::arg("jobs") = 1);
  m.def("_verify_all", &verify_all, py::arg("max_degree") = 6, py::arg("free_cutoff") = 6,
        py::arg("jobs") = 1);

  py::register_exception<weylkit::ParseError>(m, "ParseError", PyExc_ValueError);
}
